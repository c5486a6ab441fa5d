#include "gwzeta/format.hpp"

#include <map>
#include <sstream>

namespace gwzeta {

std::string show_gw(const GwFq& x) {
    if (x.is_zero()) return "0";
    Integer r = x.rank() - x.disc();
    std::string out;
    if (r != 0) out = r.get_str() + "⟨1⟩";
    if (x.disc()) {
        if (!out.empty()) out += " + ";
        out += "1⟨u⟩";
    }
    return out;
}

std::string show_gw_int(const GwInt& x) {
    if (x.is_zero()) return "0";
    std::string out;
    if (x.c1() != 0) out = x.c1().get_str() + "⟨1⟩";
    if (x.cm1() != 0) {
        if (!out.empty()) out += " + ";
        out += x.cm1().get_str() + "⟨-1⟩";
    }
    return out;
}

namespace {

std::string q_eps_power_name(int i) {
    if (i == 0) return "1";
    if (i == 1) return "q_ε";
    return "q_ε^" + std::to_string(i);
}

// Splits a pole into (unit prefix, exponent of q_eps) when it has one of the
// catalog shapes; returns false otherwise.
bool match_pole(const GwFq& pole, std::string& out) {
    const FqTag& f = pole.field();
    const GwFq u = gw_u(f);
    for (int i = 0;; ++i) {
        GwFq qi = q_eps_pow(f, i);
        if (qi.rank() > abs(pole.rank())) return false;
        if (pole == qi) {
            out = q_eps_power_name(i);
            return true;
        }
        if (pole == -qi) {
            out = "-" + q_eps_power_name(i);
            return true;
        }
        if (pole == u * qi) {
            out = "⟨u⟩";
            if (i > 0) out += q_eps_power_name(i);
            return true;
        }
        if (pole == -(u * qi)) {
            out = "-⟨u⟩";
            if (i > 0) out += q_eps_power_name(i);
            return true;
        }
    }
}

}  // namespace

std::string show_pole(const GwFq& pole) {
    std::string out;
    if (match_pole(pole, out)) return out;
    return "(" + show_gw(pole) + ")";
}

std::string show_factor_list(const FactorList<GwFq>& factors) {
    if (factors.empty()) return "0";
    const FqTag& f = factors.front().weight.field();

    // Group the (pole, mult) pairs by weight, preserving first appearance.
    std::vector<GwFq> weights;
    std::vector<std::vector<const Factor<GwFq>*>> groups;
    for (const auto& fac : factors) {
        size_t g = weights.size();
        for (size_t i = 0; i < weights.size(); ++i)
            if (weights[i] == fac.weight) g = i;
        if (g == weights.size()) {
            weights.push_back(fac.weight);
            groups.emplace_back();
        }
        groups[g].push_back(&fac);
    }

    std::ostringstream os;
    for (size_t g = 0; g < weights.size(); ++g) {
        if (g > 0) os << " + ";
        const GwFq& w = weights[g];
        if (w == GwFq::one(f))
            ;  // weight 1 needs no prefix
        else if (w == gw_minus_one(f))
            os << "⟨-1⟩ ";
        else if (w == gw_u(f))
            os << "⟨u⟩ ";
        else if (w == gw_minus_one(f) * gw_u(f))
            os << "⟨-u⟩ ";
        else
            os << "(" << show_gw(w) << ") ";
        os << "d/dt log 1/(";
        for (const Factor<GwFq>* fac : groups[g]) {
            std::string pole = show_pole(fac->pole);
            if (pole == "1")
                os << "(1 - t)";
            else if (pole.front() == '-')
                os << "(1 + " << pole.substr(1) << " t)";
            else
                os << "(1 - " << pole << " t)";
            if (fac->mult != 1) os << "^" << fac->mult.get_str();
        }
        os << ")";
    }
    return os.str();
}

std::string show_series(const Series<GwFq>& s) {
    std::ostringstream os;
    for (int i = 0; i < s.order(); ++i)
        os << "  t^" << i << ": " << show_gw(s[i]) << "\n";
    return os.str();
}

std::string show_int_series(const Series<Integer>& s) {
    std::ostringstream os;
    for (int i = 0; i < s.order(); ++i) {
        if (i > 0) os << " ";
        os << s[i].get_str();
    }
    return os.str();
}

}  // namespace gwzeta
