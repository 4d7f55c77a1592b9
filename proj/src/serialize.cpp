#include "prony/serialize.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace prony {

nlohmann::json signal_to_json(const PronySignal& sig)
{
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const cx& z : sig.nodes) j["nodes"].push_back({z.real(), z.imag()});
    j["mults"]  = sig.mults;
    j["coeffs"] = nlohmann::json::array();
    for (const auto& block : sig.coeffs)
    {
        nlohmann::json b = nlohmann::json::array();
        for (const cx& a : block) b.push_back({a.real(), a.imag()});
        j["coeffs"].push_back(b);
    }
    j["kind"] = to_string(sig.kind);
    return j;
}

PronySignal signal_from_json(const nlohmann::json& j)
{
    PronySignal sig;
    for (const auto& z : j.at("nodes"))
        sig.nodes.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    sig.mults = j.at("mults").get<std::vector<int>>();
    for (const auto& block : j.at("coeffs"))
    {
        std::vector<cx> b;
        for (const auto& a : block) b.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
        sig.coeffs.push_back(b);
    }
    sig.kind = kind_from_string(j.at("kind").get<std::string>());
    sig.validate();
    return sig;
}

nlohmann::json grid_to_json(const SamplingGrid& grid)
{
    return {{"t", grid.t}, {"p", grid.p}, {"n", grid.n}};
}

SamplingGrid grid_from_json(const nlohmann::json& j)
{
    SamplingGrid g{j.at("t").get<long>(), j.at("p").get<long>(), j.at("n").get<int>()};
    g.validate();
    return g;
}

void write_measurements_csv(std::ostream& os, const MeasurementVector& meas)
{
    os << "# eps=" << std::setprecision(17) << meas.noise_bound << "\n";
    os << "k,re,im\n";
    for (int k = 0; k < meas.grid.n; ++k)
        os << meas.grid.index(k) << "," << std::setprecision(17) << meas.values(k).real()
           << "," << meas.values(k).imag() << "\n";
}

MeasurementVector read_measurements_csv(std::istream& is)
{
    MeasurementVector meas;
    std::string line;
    std::vector<long> ks;
    std::vector<cx> vals;
    while (std::getline(is, line))
    {
        if (line.empty()) continue;
        if (line[0] == '#')
        {
            const auto pos = line.find("eps=");
            if (pos != std::string::npos) meas.noise_bound = std::stod(line.substr(pos + 4));
            continue;
        }
        if (line.rfind("k,", 0) == 0) continue;  // header
        std::stringstream ss(line);
        std::string tok;
        std::getline(ss, tok, ',');
        const long k = std::stol(tok);
        std::getline(ss, tok, ',');
        const double re = std::stod(tok);
        std::getline(ss, tok, ',');
        const double im = std::stod(tok);
        ks.push_back(k);
        vals.emplace_back(re, im);
    }
    if (vals.empty()) throw std::runtime_error("measurement CSV contains no samples");
    meas.grid.t = ks.front();
    meas.grid.p = ks.size() > 1 ? ks[1] - ks[0] : 1;
    meas.grid.n = static_cast<int>(ks.size());
    meas.values.resize(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) meas.values(i) = vals[i];
    return meas;
}

std::string format_complex(cx v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v.real();
    if (v.imag() >= 0.0) os << "+";
    os << std::setprecision(17) << v.imag() << "i";
    return os.str();
}

void write_matrix_csv(std::ostream& os, const cmat& m)
{
    for (int i = 0; i < m.rows(); ++i)
    {
        for (int j = 0; j < m.cols(); ++j)
        {
            if (j) os << ",";
            os << format_complex(m(i, j));
        }
        os << "\n";
    }
}

}  // namespace prony
