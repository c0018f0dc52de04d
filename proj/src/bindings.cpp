#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ddlab/concentric.hpp"
#include "ddlab/curves.hpp"
#include "ddlab/distance.hpp"
#include "ddlab/experiment.hpp"
#include "ddlab/generators.hpp"
#include "ddlab/r4.hpp"
#include "ddlab/verify.hpp"

namespace py = pybind11;

namespace {

using namespace ddlab;

// rationals cross the boundary as "num/den" strings
Rational rat(const std::string& s) { return Rational::parse_or_throw(s); }

Point2 point2(const std::pair<std::string, std::string>& p) {
    return {rat(p.first), rat(p.second)};
}

using PyPoint = std::pair<std::string, std::string>;
using PyPoints = std::vector<PyPoint>;

std::vector<Point2> points(const PyPoints& ps) {
    std::vector<Point2> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(point2(p));
    return out;
}

PyPoints py_points(const std::vector<Point2>& ps) {
    PyPoints out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.emplace_back(p.x1.str(), p.x2.str());
    return out;
}

std::vector<CircleParam> params(const std::vector<std::string>& ts) {
    std::vector<CircleParam> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back({rat(t)});
    return out;
}

using PyCurve = std::vector<std::tuple<int, int, std::string>>;

PyCurve py_curve(const BivarPoly& F) {
    PyCurve out;
    for (const auto& [k, c] : F.terms()) out.emplace_back(k.first, k.second, c.str());
    return out;
}

BivarPoly curve(const PyCurve& terms) {
    BivarPoly F;
    for (const auto& [i, j, c] : terms) F.set_coeff(i, j, F.coeff(i, j) + rat(c));
    return F;
}

py::dict intersection_dict(const IntersectionResult& res) {
    py::dict d;
    d["degenerate"] = res.degenerate;
    if (!res.degenerate) {
        d["count"] = res.count;
        py::list ws;
        for (const auto& w : res.witnesses) ws.append(py::make_tuple(w[0], w[1], w[2], w[3]));
        d["witnesses"] = ws;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_ddlab, m) {
    m.doc() = "exact-arithmetic distinct-distance laboratory (C++ core)";

    // exact core
    m.def("phi", [](const std::string& t) {
        Point2 u = phi(rat(t));
        return PyPoint{u.x1.str(), u.x2.str()};
    }, py::arg("t"), "rational unit-circle parametrization");
    m.def("phi_inverse", [](const PyPoint& u) { return phi_inverse(point2(u)).str(); },
          py::arg("u"));
    m.def("sq_dist", [](const PyPoint& a, const PyPoint& b) {
        return sq_dist(point2(a), point2(b)).str();
    });
    m.def("annulus_index", [](const PyPoint& p) { return annulus_index(point2(p)); });
    m.def("annulus_filter", [](const PyPoints& ps) { return py_points(annulus_filter(points(ps))); });

    // distance energy
    m.def("distance_set", [](const PyPoints& S, const PyPoints& P) {
        std::vector<std::string> out;
        for (const auto& t : distance_set(points(S), points(P))) out.push_back(t.str());
        return out;
    });
    m.def("quadruple_count",
          [](const PyPoints& S, const PyPoints& P) { return quadruple_count(points(S), points(P)); });
    m.def("quadruple_count_bruteforce", [](const PyPoints& S, const PyPoints& P) {
        return quadruple_count_bruteforce(points(S), points(P));
    });
    m.def("quadruple_count_offdiag", [](const PyPoints& S, const PyPoints& P) {
        return quadruple_count_offdiag(points(S), points(P));
    });
    m.def("diagonal_quadruples", [](const PyPoints& S, const PyPoints& P) {
        return diagonal_quadruples(points(S), points(P));
    });
    m.def("energy_lower_bound", [](const PyPoints& S, const PyPoints& P) {
        return energy_lower_bound(points(S), points(P)).str();
    });

    // plane curves
    m.def("f_pq_eval", [](const PyPoint& p, const PyPoint& q, const PyPoint& u, const PyPoint& v) {
        return f_pq_eval(point2(p), point2(q), point2(u), point2(v)).str();
    });
    m.def("build_F", [](const PyPoint& p, const PyPoint& q) {
        return py_curve(build_F(point2(p), point2(q)));
    }, "coefficients of F_{p,q} as (i, j, \"num/den\") triples");
    m.def("reduced_curve_poly", [](const PyPoint& p, const PyPoint& q) {
        return py_curve(reduced_curve_poly(point2(p), point2(q)));
    });
    m.def("curve_total_degree",
          [](const PyCurve& F) { return curve(F).total_degree(); });
    m.def("eval_curve", [](const PyCurve& F, const std::string& x, const std::string& y) {
        return curve(F).eval(rat(x), rat(y)).str();
    });
    m.def("incidence_count", [](const std::vector<std::string>& s_params, const PyPoints& P) {
        return incidence_count(params(s_params), ordered_pairs(points(P)));
    }, "incidences of the parameter grid with all ordered p != q curves");
    m.def("common_component_check", [](const PyCurve& F1, const PyCurve& F2) {
        return common_component_check(curve(F1), curve(F2));
    });

    // r4
    m.def("curve_pair_intersection",
          [](const PyPoint& p, const PyPoint& q, const PyPoint& p2, const PyPoint& q2) {
              return intersection_dict(
                  curve_pair_intersection(point2(p), point2(q), point2(p2), point2(q2)));
          });
    m.def("intersect_with_2flat",
          [](const PyPoint& p, const PyPoint& q,
             const std::pair<std::vector<std::string>, std::string>& h1,
             const std::pair<std::vector<std::string>, std::string>& h2) {
              auto mk = [](const std::pair<std::vector<std::string>, std::string>& h) {
                  if (h.first.size() != 4)
                      throw std::invalid_argument("hyperplane normal needs 4 entries");
                  return Hyperplane4{
                      {{rat(h.first[0]), rat(h.first[1]), rat(h.first[2]), rat(h.first[3])}},
                      rat(h.second)};
              };
              return intersection_dict(
                  intersect_with_2flat(point2(p), point2(q), TwoFlat(mk(h1), mk(h2))));
          },
          py::arg("p"), py::arg("q"), py::arg("h1"), py::arg("h2"),
          "hyperplanes as ([n0,n1,n2,n3], offset) rational strings");
    m.def("isolated_point_probe",
          [](const PyPoint& p, const PyPoint& q, const std::vector<std::string>& w, double t) {
              if (w.size() != 4) throw std::invalid_argument("point needs 4 coordinates");
              Point4 pt{{rat(w[0]), rat(w[1]), rat(w[2]), rat(w[3])}};
              auto out = isolated_point_probe(point2(p), point2(q), pt, t);
              return py::make_tuple(out[0], out[1], out[2], out[3]);
          });
    m.def("r4_verify", [](std::size_t trials, std::uint64_t seed) {
        R4VerifySummary s = r4_verify(trials, seed);
        py::dict d;
        d["ok"] = s.ok();
        d["max_flat_count"] = s.max_flat_count;
        d["max_pair_count"] = s.max_pair_count;
        d["degenerate_results"] = s.degenerate_results;
        d["summary"] = s.str();
        return d;
    }, py::arg("trials") = 100, py::arg("seed") = 1);

    // concentric
    m.def("concentric_report",
          [](const std::string& r1, const std::string& r2, const std::vector<std::string>& s,
             const std::vector<std::string>& p) {
              ConcentricConfig cfg{rat(r1), rat(r2), params(s), params(p)};
              ConcentricReport rep = concentric_report(cfg);
              py::dict d;
              d["delta"] = rep.delta;
              d["a_minus_b"] = rep.a_minus_b;
              d["b_minus_b"] = rep.b_minus_b;
              d["m"] = rep.m;
              d["m_offdiag"] = rep.m_offdiag;
              d["alpha_hat"] = rep.alpha_hat;
              d["chain_bound"] = rep.chain_bound;
              d["chain_ok"] = rep.chain_ok;
              d["s_kept"] = rep.s_kept;
              d["p_kept"] = rep.p_kept;
              return d;
          },
          py::arg("r1"), py::arg("r2"), py::arg("s_params"), py::arg("p_params"));
    m.def("even_spaced_counterexample", [](int n, double scale) {
        auto [S, P] = even_spaced_counterexample(n, scale);
        return std::size_t(approx_distinct_sq_distances(S, P));
    }, py::arg("n"), py::arg("scale"),
       "distinct squared distances (1e-9 relative dedup) of the evenly spaced pair");

    // harness
    m.def("gen_circle", [](std::size_t n, std::uint64_t seed) {
        std::vector<std::string> out;
        for (const auto& t : gen_circle(n, seed)) out.push_back(t.t.str());
        return out;
    }, py::arg("n"), py::arg("seed") = 1);
    m.def("gen_generic_plane", [](std::size_t n, std::uint64_t seed) {
        return py_points(gen_generic_plane(n, seed));
    }, py::arg("n"), py::arg("seed") = 1);
    m.def("bound_report_csv", [](std::vector<std::size_t> sizes, std::uint64_t seed,
                                 double epsilon, const std::string& generator) {
        ExperimentConfig cfg;
        cfg.sizes = std::move(sizes);
        cfg.seed = seed;
        cfg.epsilon = epsilon;
        cfg.generator = generator;
        return bound_report_csv(bound_report(cfg));
    }, py::arg("sizes"), py::arg("seed") = 1, py::arg("epsilon") = 0.01,
       py::arg("generator") = "random");
}
