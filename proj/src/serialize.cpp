#include "qdense/serialize.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace qdense {

namespace {

double clean(double x) {
    return x == 0.0 ? 0.0 : x;  // folds -0.0 into 0.0
}

std::string real_to_text(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << clean(x);
    return out.str();
}

std::string complex_to_text(cplx value) {
    const double re = clean(value.real());
    const double im = clean(value.imag());
    if (im == 0.0) return real_to_text(re);
    if (re == 0.0) return real_to_text(im) + "i";
    std::ostringstream out;
    out << "(" << real_to_text(re) << (im < 0 ? "" : "+") << real_to_text(im) << "i)";
    return out.str();
}

}  // namespace

json complex_to_json(cplx value) {
    return json::array({clean(value.real()), clean(value.imag())});
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row.push_back(complex_to_json(m.at(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json sparse_state_to_json(const StateVector& s) {
    json terms = json::array();
    for (std::size_t flat = 0; flat < s.size(); ++flat) {
        if (std::abs(s.amp(flat)) < kListingCutoff) continue;
        terms.push_back({{"ket", s.layout().decode(flat)},
                         {"amplitude", complex_to_json(s.amp(flat))}});
    }
    return {{"dims", s.layout().dims()}, {"terms", std::move(terms)}};
}

json to_json(const MessageSymbol& symbol) {
    return json::array({symbol.m, symbol.n});
}

json to_json(const MeasurementOutcome& outcome) {
    json dist = json::array();
    for (double prob : outcome.distribution) dist.push_back(clean(prob));
    return {{"symbol", to_json(outcome.symbol)},
            {"probability", clean(outcome.probability)},
            {"distribution", std::move(dist)}};
}

json to_json(const TransferReport& report) {
    return {{"q", report.q},
            {"p", report.p},
            {"initial_state", sparse_state_to_json(report.initial_state)},
            {"final_state", sparse_state_to_json(report.final_state)},
            {"particle1_purity", clean(report.particle1_purity)},
            {"channel23_fidelity", clean(report.channel23_fidelity)},
            {"capacity_before_bits", clean(report.capacity_before)},
            {"capacity_after_bits", clean(report.capacity_after)},
            {"capacity_gain_bits", clean(report.capacity_after - report.capacity_before)}};
}

json to_json(const SessionReport& report, const SessionConfig& cfg) {
    json sent = json::array();
    json received = json::array();
    for (const MessageSymbol& s : report.sent) sent.push_back(to_json(s));
    for (const MessageSymbol& s : report.received) received.push_back(to_json(s));
    json doc = {{"p", cfg.p},
                {"q", cfg.q},
                {"num_symbols", cfg.num_symbols},
                {"seed", cfg.seed},
                {"decode_mode",
                 cfg.decode_mode == DecodeMode::kDeterministic ? "deterministic" : "sampled"},
                {"use_transfer", cfg.use_transfer},
                {"sent", std::move(sent)},
                {"received", std::move(received)},
                {"error_count", report.error_count},
                {"empirical_mutual_information_bits", clean(report.empirical_mutual_information)},
                {"theoretical_capacity_bits", clean(report.theoretical_capacity)},
                {"per_symbol_bits", clean(report.per_symbol_bits)}};
    if (report.pre_transfer_bits) {
        doc["pre_transfer_bits"] = clean(*report.pre_transfer_bits);
    }
    return doc;
}

std::string ket_to_text(const std::vector<std::size_t>& digits) {
    std::string out = "|";
    for (std::size_t d : digits) out += std::to_string(d);
    out += ">";
    return out;
}

std::string state_to_text(const StateVector& s) {
    std::string out;
    for (std::size_t flat = 0; flat < s.size(); ++flat) {
        if (std::abs(s.amp(flat)) < kListingCutoff) continue;
        if (!out.empty()) out += " ";
        const cplx a = s.amp(flat);
        if (a.imag() == 0.0 && !out.empty()) {
            out += (a.real() < 0 ? "- " : "+ ") + real_to_text(std::abs(a.real()));
        } else {
            out += complex_to_text(a);
        }
        out += ket_to_text(s.layout().decode(flat));
    }
    return out.empty() ? "0" : out;
}

std::string matrix_to_text(const ComplexMatrix& m) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        out << "  [";
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out << (c == 0 ? "" : ", ") << complex_to_text(m.at(r, c));
        }
        out << "]\n";
    }
    return out.str();
}

}  // namespace qdense
