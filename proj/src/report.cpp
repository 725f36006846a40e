#include "primegalois/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace primegalois {

namespace {

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string labels_joined(const std::vector<GroupId>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += " ";
        out += v[i].label;
    }
    return out;
}

nlohmann::json type_json(const CycleType& t) {
    nlohmann::json a = nlohmann::json::array();
    for (int p : t.parts)
        a.push_back(p);
    return a;
}

/// Evidence folded by cycle type: count and first prime per type.
struct EvidenceSummary {
    CycleType type;
    size_t count;
    std::uint64_t first;
};

std::vector<EvidenceSummary> summarize(const std::vector<ReductionSample>& ev) {
    std::map<CycleType, EvidenceSummary> m;
    for (const auto& s : ev) {
        auto it = m.find(s.type);
        if (it == m.end())
            m.emplace(s.type, EvidenceSummary{s.type, 1, s.ell});
        else
            ++it->second.count;
    }
    std::vector<EvidenceSummary> out;
    out.reserve(m.size());
    for (auto& [t, e] : m)
        out.push_back(e);
    return out;
}

} // namespace

std::string report_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "input: " << r.input << "\n";
    os << "degree: " << r.degree << "\n";
    os << "certificate: " << r.certificate << "\n";
    os << "real roots: " << r.real_roots << "\n";
    os << "complex pairs: " << r.complex_pairs << "\n";
    os << "discriminant: " << rational_str(r.disc) << "\n";
    os << "discriminant is square: " << (r.disc_square ? "yes" : "no") << "\n";
    os << "branch: " << to_string(r.branch) << "\n";
    if (!r.evidence.empty()) {
        os << "evidence: " << r.evidence.size() << " usable primes\n";
        for (const auto& e : summarize(r.evidence))
            os << "  type " << e.type.str() << ": " << e.count << " primes (first at "
               << e.first << ")\n";
    }
    os << "candidates: " << labels_joined(r.survivors) << "\n";
    os << "exact: " << (r.exact ? "yes" : "no") << "\n";
    os << "solvability: " << to_string(r.solvability) << "\n";
    os << "Galois group: " << r.group.label;
    return os.str();
}

nlohmann::json report_json(const ClassificationReport& r) {
    nlohmann::json j;
    j["input"] = r.input;
    j["degree"] = r.degree;
    j["real_roots"] = r.real_roots;
    j["complex_pairs"] = r.complex_pairs;
    j["discriminant"] = rational_str(r.disc);
    j["disc_is_square"] = r.disc_square;
    j["branch"] = to_string(r.branch);
    nlohmann::json verdict;
    verdict["group"] = r.group.label;
    verdict["exact"] = r.exact;
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& g : r.survivors)
        cands.push_back(g.label);
    verdict["candidates"] = cands;
    j["verdict"] = verdict;
    j["solvability"] = to_string(r.solvability);
    nlohmann::json ev = nlohmann::json::array();
    for (const auto& s : r.evidence) {
        nlohmann::json e;
        e["prime"] = s.ell;
        e["cycle_type"] = type_json(s.type);
        ev.push_back(e);
    }
    j["evidence"] = ev;
    j["certificate"] = r.certificate;
    return j;
}

std::string consistency_text(const ConsistencyReport& cc) {
    std::ostringstream os;
    os << "consistency: " << (cc.pass ? "pass" : "FAIL") << "\n";
    for (const auto& [name, ok] : cc.checks)
        os << "  [" << (ok ? "ok" : "FAIL") << "] " << name << "\n";
    return os.str();
}

namespace {

std::string coords_str(const CyclotomicElement& a) {
    std::string out = "[";
    const auto& c = a.coords();
    for (size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ", ";
        out += c[i].get_str();
    }
    return out + "]";
}

} // namespace

std::string realization_text(const RealizationResult& r, const ConsistencyReport& cc) {
    std::ostringstream os;
    os << "target: " << r.target << "\n";
    os << "polynomial: " << to_string(r.polynomial) << "\n";
    os << "embedding: "
       << (r.embedding == EmbeddingStatus::complete ? "complete" : "base step only") << "\n";
    if (!r.note.empty())
        os << "note: " << r.note << "\n";
    if (r.power)
        os << "construction: x^" << r.power->p << " - " << r.power->a.get_str() << "\n";
    if (r.period) {
        os << "construction: Gaussian period, q = " << r.period->q << ", m = " << r.period->m
           << ", n = " << r.period->n << "\n";
        os << "period coordinates: " << coords_str(r.period->alpha) << "\n";
    }
    if (r.verification)
        os << "verification: Galois group " << r.verification->group.label << ", solvability "
           << to_string(r.verification->solvability) << "\n";
    os << consistency_text(cc);
    return os.str();
}

nlohmann::json realization_json(const RealizationResult& r, const ConsistencyReport& cc) {
    nlohmann::json j;
    j["target"] = r.target;
    j["kind"] = r.kind == TargetKind::cyclic ? "cyclic" : "frobenius";
    if (r.kind == TargetKind::frobenius)
        j["p"] = r.target_p;
    j["n"] = r.target_n;
    j["polynomial"] = to_string(r.polynomial);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : r.polynomial.coeffs())
        coeffs.push_back(c.get_str());
    j["coefficients"] = coeffs;
    j["embedding"] = r.embedding == EmbeddingStatus::complete ? "complete" : "base_step_only";
    if (!r.note.empty())
        j["note"] = r.note;
    if (r.power) {
        nlohmann::json c;
        c["kind"] = "radical";
        c["p"] = r.power->p;
        c["a"] = r.power->a.get_str();
        j["construction"] = c;
    }
    if (r.period) {
        nlohmann::json c;
        c["kind"] = "gaussian_period";
        c["q"] = r.period->q;
        c["m"] = r.period->m;
        c["n"] = r.period->n;
        nlohmann::json al = nlohmann::json::array();
        for (const auto& z : r.period->alpha.coords())
            al.push_back(z.get_str());
        c["alpha"] = al;
        j["construction"] = c;
    }
    if (r.verification)
        j["verification"] = report_json(*r.verification);
    nlohmann::json cj;
    cj["pass"] = cc.pass;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& [name, ok] : cc.checks) {
        nlohmann::json c;
        c["name"] = name;
        c["ok"] = ok;
        checks.push_back(c);
    }
    cj["checks"] = checks;
    j["consistency"] = cj;
    return j;
}

std::string periods_text(std::uint64_t q, std::uint64_t n, std::uint64_t m,
                         const CyclotomicElement& alpha, const IntPoly& minpoly) {
    std::ostringstream os;
    os << "q: " << q << "\n";
    os << "n: " << n << "\n";
    os << "m: " << m << " (primitive root mod q)\n";
    os << "period length: " << (q - 1) / n << "\n";
    os << "alpha coordinates (basis 1, zeta, ..., zeta^" << q - 2
       << "): " << coords_str(alpha) << "\n";
    os << "minimal polynomial: " << to_string(minpoly);
    return os.str();
}

} // namespace primegalois
