#include "mtc/emit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mtc/rational.hpp"

namespace mtc {

using nlohmann::json;

json cyc_to_json(const Cyc& z) {
    Cyc r = z.descend();
    json coeffs = json::array();
    for (const auto& c : r.coeffs()) coeffs.push_back(rat_to_string(c));
    return json{{"order", r.order()}, {"coeffs", coeffs}};
}

Cyc cyc_from_json(const json& j) {
    long order = j.at("order").get<long>();
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rat(c.get<std::string>()));
    return Cyc::from_coefficients(order, std::move(coeffs));
}

json modular_data_to_json(const ModularData& md) {
    json j;
    j["labels"] = md.labels;
    json dims = json::array(), theta = json::array(), S = json::array();
    for (const auto& d : md.dims) dims.push_back(cyc_to_json(d));
    for (const auto& t : md.theta) theta.push_back(cyc_to_json(t));
    for (const auto& row : md.S) {
        json r = json::array();
        for (const auto& e : row) r.push_back(cyc_to_json(e));
        S.push_back(std::move(r));
    }
    j["dims"] = std::move(dims);
    j["theta"] = std::move(theta);
    j["S"] = std::move(S);
    return j;
}

ModularData modular_data_from_json(const json& j) {
    ModularData md;
    md.labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& d : j.at("dims")) md.dims.push_back(cyc_from_json(d));
    for (const auto& t : j.at("theta")) md.theta.push_back(cyc_from_json(t));
    for (const auto& row : j.at("S")) {
        std::vector<Cyc> r;
        for (const auto& e : row) r.push_back(cyc_from_json(e));
        md.S.push_back(std::move(r));
    }
    size_t n = md.labels.size();
    if (md.dims.size() != n || md.theta.size() != n || md.S.size() != n)
        throw std::invalid_argument("modular data fields have inconsistent sizes");
    for (const auto& row : md.S)
        if (row.size() != n)
            throw std::invalid_argument("S matrix is not square");
    return md;
}

std::string cyc_to_pretty(const Cyc& z) {
    Cyc r = z.descend();
    if (auto q = r.is_rational()) return rat_to_string(*q);
    if (auto e = r.as_root_exponent())
        return "z" + std::to_string(e->first) +
               (e->second == 1 ? "" : "^" + std::to_string(e->second));
    std::string out;
    long m = r.order();
    const auto& c = r.coeffs();
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Rat a = c[k];
        std::string term;
        if (k == 0) {
            term = rat_to_string(a);
        } else {
            if (a == -1)
                term = "-";
            else if (a != 1)
                term = rat_to_string(a) + "*";
            term += "z" + std::to_string(m);
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string cyc_to_numeric(const Cyc& z, int digits) {
    auto v = z.to_complex_approx();
    std::ostringstream os;
    os.precision(digits);
    // Snap tiny parts so emitted text is stable across platforms.
    double re = v.real(), im = v.imag();
    double eps = std::pow(10.0, -digits - 2);
    if (std::fabs(re) < eps) re = 0.0;
    if (std::fabs(im) < eps) im = 0.0;
    os << re;
    if (im != 0.0) {
        os << (im > 0 ? "+" : "-") << std::fabs(im) << "i";
    }
    return os.str();
}

std::string modular_data_to_csv(const ModularData& md, int digits) {
    std::ostringstream os;
    os << "label,dim,theta";
    for (const auto& l : md.labels) os << ",S:" << l;
    os << "\n";
    for (long i = 0; i < md.size(); ++i) {
        os << md.labels[i] << "," << cyc_to_numeric(md.dims[i], digits) << ","
           << cyc_to_numeric(md.theta[i], digits);
        for (long j = 0; j < md.size(); ++j)
            os << "," << cyc_to_numeric(md.S[i][j], digits);
        os << "\n";
    }
    return os.str();
}

namespace {

std::string cyc_to_latex(const Cyc& z) {
    Cyc r = z.descend();
    if (auto q = r.is_rational()) return rat_to_string(*q);
    auto root = [&](long m, long k) {
        std::string s = "\\zeta_{" + std::to_string(m) + "}";
        if (k != 1) s += "^{" + std::to_string(k) + "}";
        return s;
    };
    if (auto e = r.as_root_exponent()) return root(e->first, e->second);
    std::string out;
    const long m = r.order();
    const auto& c = r.coeffs();
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        std::string term;
        if (k == 0) {
            term = rat_to_string(c[k]);
        } else {
            if (c[k] == -1)
                term = "-";
            else if (c[k] != 1)
                term = rat_to_string(c[k]);
            term += root(m, (long)k);
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string modular_data_to_latex(const ModularData& md) {
    std::ostringstream os;
    os << "% labels: ";
    for (long i = 0; i < md.size(); ++i) os << (i ? ", " : "") << md.labels[i];
    os << "\nS = \\begin{bmatrix}\n";
    for (long i = 0; i < md.size(); ++i) {
        for (long j = 0; j < md.size(); ++j)
            os << (j ? " & " : "") << cyc_to_latex(md.S[i][j]);
        os << " \\\\\n";
    }
    os << "\\end{bmatrix}\n";
    os << "T = \\mathrm{diag}(";
    for (long i = 0; i < md.size(); ++i) os << (i ? ", " : "") << cyc_to_latex(md.theta[i]);
    os << ")\n";
    return os.str();
}

std::string modular_data_to_pretty(const ModularData& md, int digits) {
    std::ostringstream os;
    os << md.size() << " simple objects\n";
    for (long i = 0; i < md.size(); ++i)
        os << "  " << md.labels[i] << ": dim " << cyc_to_pretty(md.dims[i]) << " = "
           << cyc_to_numeric(md.dims[i], digits) << ", theta " << cyc_to_pretty(md.theta[i])
           << "\n";
    os << "S (exact):\n";
    for (long i = 0; i < md.size(); ++i) {
        os << "  [";
        for (long j = 0; j < md.size(); ++j)
            os << (j ? ", " : "") << cyc_to_pretty(md.S[i][j]);
        os << "]\n";
    }
    return os.str();
}

} // namespace mtc
