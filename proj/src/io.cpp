#include "ddlab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ddlab {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("'" + path + "': " + e.what());
    }
    return j;
}

Rational rational_from_json(const json& v, Mode mode, const std::string& context) {
    if (v.is_string()) return Rational::parse_or_throw(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number_float()) {
        if (mode == Mode::Exact)
            throw std::invalid_argument(context +
                                        ": floating-point literal rejected in exact mode");
        return Rational(mpq_class(v.get<double>()));
    }
    throw std::invalid_argument(context + ": expected a rational");
}

}  // namespace

std::vector<Point2> read_point_set(const std::string& path, Mode mode) {
    json j = load_json(path);
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw std::invalid_argument("'" + path + "': expected {\"points\": [[x, y], ...]}");
    std::vector<Point2> out;
    for (const auto& entry : j["points"]) {
        if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("'" + path + "': each point must be [x, y]");
        out.push_back({rational_from_json(entry[0], mode, path),
                       rational_from_json(entry[1], mode, path)});
    }
    return out;
}

void write_point_set(const std::string& path, const std::vector<Point2>& points) {
    json arr = json::array();
    for (const auto& p : points) arr.push_back({p.x1.str(), p.x2.str()});
    write_text_file(path, json{{"points", arr}}.dump(2) + "\n");
}

BivarPoly read_curve(const std::string& path) {
    json j = load_json(path);
    if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array())
        throw std::invalid_argument("'" + path +
                                    "': expected {\"coefficients\": [[i, j, c], ...]}");
    BivarPoly F;
    for (const auto& term : j["coefficients"]) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer() ||
            !term[1].is_number_integer())
            throw std::invalid_argument("'" + path + "': each term must be [i, j, \"num/den\"]");
        int i = term[0].get<int>(), jj = term[1].get<int>();
        if (i < 0 || jj < 0)
            throw std::invalid_argument("'" + path + "': negative exponent");
        F.set_coeff(i, jj, F.coeff(i, jj) + rational_from_json(term[2], Mode::Exact, path));
    }
    return F;
}

void write_curve(const std::string& path, const BivarPoly& F) {
    json arr = json::array();
    for (const auto& [k, c] : F.terms()) arr.push_back({k.first, k.second, c.str()});
    write_text_file(path, json{{"coefficients", arr}}.dump(2) + "\n");
}

TwoFlat read_flat(const std::string& path) {
    json j = load_json(path);
    if (!j.is_object() || !j.contains("hyperplanes") || !j["hyperplanes"].is_array() ||
        j["hyperplanes"].size() != 2)
        throw std::invalid_argument("'" + path +
                                    "': expected {\"hyperplanes\": [h1, h2]} with two entries");
    auto read_h = [&](const json& h) {
        if (!h.is_object() || !h.contains("normal") || !h["normal"].is_array() ||
            h["normal"].size() != 4 || !h.contains("offset"))
            throw std::invalid_argument(
                "'" + path + "': hyperplane must be {\"normal\": [r,r,r,r], \"offset\": r}");
        Hyperplane4 out;
        for (size_t i = 0; i < 4; ++i)
            out.normal[i] = rational_from_json(h["normal"][i], Mode::Exact, path);
        out.offset = rational_from_json(h["offset"], Mode::Exact, path);
        return out;
    };
    return TwoFlat(read_h(j["hyperplanes"][0]), read_h(j["hyperplanes"][1]));
}

ConcentricConfig read_concentric_config(const std::string& path) {
    json j = load_json(path);
    if (!j.is_object() || !j.contains("r1") || !j.contains("r2") || !j.contains("s_params") ||
        !j.contains("p_params"))
        throw std::invalid_argument(
            "'" + path + "': expected {\"r1\", \"r2\", \"s_params\", \"p_params\"}");
    ConcentricConfig cfg;
    cfg.r1 = rational_from_json(j["r1"], Mode::Exact, path);
    cfg.r2 = rational_from_json(j["r2"], Mode::Exact, path);
    for (const auto& t : j["s_params"])
        cfg.s_params.push_back({rational_from_json(t, Mode::Exact, path)});
    for (const auto& t : j["p_params"])
        cfg.p_params.push_back({rational_from_json(t, Mode::Exact, path)});
    cfg.validate();
    return cfg;
}

ExperimentConfig read_experiment_config(const std::string& path) {
    json j = load_json(path);
    ExperimentConfig cfg;
    if (j.contains("generator")) cfg.generator = j["generator"].get<std::string>();
    if (j.contains("sizes"))
        for (const auto& s : j["sizes"]) cfg.sizes.push_back(s.get<std::size_t>());
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("mode")) {
        std::string m = j["mode"].get<std::string>();
        if (m == "exact") cfg.mode = Mode::Exact;
        else if (m == "approx") cfg.mode = Mode::Approx;
        else throw std::invalid_argument("'" + path + "': mode must be exact or approx");
    }
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("epsilon")) cfg.epsilon = j["epsilon"].get<double>();
    cfg.validate();
    return cfg;
}

Point2 parse_point_arg(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("point argument must look like \"a/b,c/d\"");
    return {Rational::parse_or_throw(text.substr(0, comma)),
            Rational::parse_or_throw(text.substr(comma + 1))};
}

std::pair<Point2, Point2> parse_pair_arg(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("pair argument must look like \"p1,p2;q1,q2\"");
    return {parse_point_arg(text.substr(0, semi)), parse_point_arg(text.substr(semi + 1))};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace ddlab
