#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polybounds/bernoulli.hpp"
#include "polybounds/bounds.hpp"
#include "polybounds/format.hpp"
#include "polybounds/oracle.hpp"
#include "polybounds/series.hpp"
#include "polybounds/verify.hpp"

namespace py = pybind11;
namespace pb = polybounds;

namespace {

pb::Target target_from_name(const std::string& name) {
    if (name == "wilker") return pb::Target::wilker;
    if (name == "sf-d3") return pb::Target::sf_d3;
    if (name == "sf-dpi") return pb::Target::sf_dpi;
    if (name == "sf-e") return pb::Target::sf_e;
    throw std::invalid_argument("unknown target '" + name + "'");
}

pb::BoundPair make_pair(const std::string& target, unsigned order) {
    switch (target_from_name(target)) {
        case pb::Target::wilker: return pb::wilker_bounds(order);
        case pb::Target::sf_d3: return pb::sf_d_bounds(pb::SfK::three, order);
        case pb::Target::sf_dpi: return pb::sf_d_bounds(pb::SfK::pi, order);
        case pb::Target::sf_e: return pb::sf_e_bounds(order);
    }
    throw std::invalid_argument("unknown target");
}

py::list side_terms(const pb::OddPolyBound& bound) {
    py::list out;
    for (const auto& [deg, coeff] : bound.terms)
        out.append(py::make_tuple(deg, pb::to_exact_string(coeff)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_polybounds, m) {
    m.doc() = "Certified polynomial bounds for Wilker and Shafer-Fink type inequalities";

    m.def("bernoulli", [](unsigned n) { return pb::bernoulli(n).to_string(); },
          py::arg("n"), "Bernoulli number B_n (B_1 = -1/2) as an exact 'a/b' string");
    m.def("wilker_c", [](unsigned k) { return pb::to_exact_string(pb::wilker_c(k)); }, py::arg("k"));
    m.def("sf_d",
          [](const std::string& k, unsigned m) {
              if (k != "three" && k != "pi") throw std::invalid_argument("k must be 'three' or 'pi'");
              return pb::to_exact_string(pb::sf_d(k == "pi" ? pb::SfK::pi : pb::SfK::three, m));
          },
          py::arg("k"), py::arg("m"));
    m.def("sf_e", [](unsigned m) { return pb::to_exact_string(pb::sf_e(m)); }, py::arg("m"));
    m.def("taylor_head",
          [](unsigned terms) {
              std::vector<std::string> out;
              for (const auto& c : pb::taylor_head(pb::TargetId::wilker, terms))
                  out.push_back(pb::to_exact_string(c));
              return out;
          },
          py::arg("terms"));

    m.def("wilker_gap_constant",
          [](unsigned m_) { return pb::to_exact_string(pb::wilker_gap_constant(m_)); },
          py::arg("m"),
          "Exact gap constant: the order-m bound gap is this times (2x/pi)^(2m+1)");
    m.def("split_nonneg",
          [](const std::vector<std::string>& coeffs) {
              std::vector<pb::PiConstant> in;
              in.reserve(coeffs.size());
              for (const auto& s : coeffs) in.push_back(pb::parse_exact(s));
              const pb::SplitSeries split = pb::split_nonneg(in);
              py::list nonneg, negative;
              for (const auto& c : split.nonneg) nonneg.append(pb::to_exact_string(c));
              for (const auto& [i, c] : split.negative_terms)
                  negative.append(py::make_tuple(i, pb::to_exact_string(c)));
              py::dict out;
              out["nonneg"] = nonneg;
              out["negative_terms"] = negative;
              return out;
          },
          py::arg("coeffs"),
          "Split a coefficient list into its nonnegative part and negative terms");

    m.def("pi_eval",
          [](const std::string& exact, long prec, unsigned digits) {
              return pb::to_decimal_string(pb::parse_exact(exact), prec, digits);
          },
          py::arg("exact"), py::arg("prec") = 256, py::arg("digits") = 12,
          "Decimal value of an exact constant in the 'a/b*pi^e' grammar");
    m.def("pi_sign", [](const std::string& exact) { return pb::pi_sign(pb::parse_exact(exact)); },
          py::arg("exact"));

    m.def("bounds",
          [](const std::string& target, unsigned order) {
              const pb::BoundPair pair = make_pair(target, order);
              py::dict out;
              out["target"] = target;
              out["order"] = order;
              out["domain"] = pair.target == pb::Target::wilker ? "(0, pi/2)" : "(0, 1)";
              out["denominator"] =
                  pair.lower.denom == pb::Denominator::two_plus_sqrt ? "2+sqrt(1-x^2)" : "1";
              out["lower"] = side_terms(pair.lower);
              out["upper"] = side_terms(pair.upper);
              return out;
          },
          py::arg("target"), py::arg("order"));

    m.def("verify",
          [](const std::string& target, unsigned order, unsigned grid, long prec, unsigned digits) {
              const pb::VerificationReport rep = pb::verify_pair(make_pair(target, order), grid, prec);
              py::dict out;
              out["target"] = target;
              out["order"] = order;
              out["grid"] = grid;
              out["prec"] = prec;
              out["status"] = pb::to_string(rep.status);
              out["min_lower_margin"] = rep.min_lower_margin.to_string(digits);
              out["min_upper_margin"] = rep.min_upper_margin.to_string(digits);
              out["max_gap"] = rep.max_gap.to_string(digits);
              out["argmax_x"] = rep.argmax_x.to_string(digits);
              return out;
          },
          py::arg("target"), py::arg("order"), py::arg("grid") = 10000, py::arg("prec") = 256,
          py::arg("digits") = 12);

    m.def("table",
          [](const std::vector<unsigned>& orders, long prec, unsigned digits) {
              py::list out;
              for (const auto& row : pb::wilker_error_table(orders, prec))
                  out.append(py::make_tuple(row.m, row.sup_gap.to_string(digits)));
              return out;
          },
          py::arg("orders"), py::arg("prec") = 256, py::arg("digits") = 12);

    m.def("eval_target",
          [](const std::string& target, double x, long prec, unsigned digits) {
              pb::TargetId id;
              switch (target_from_name(target)) {
                  case pb::Target::wilker: id = pb::TargetId::wilker; break;
                  case pb::Target::sf_d3: id = pb::TargetId::sf_d3; break;
                  case pb::Target::sf_dpi: id = pb::TargetId::sf_dpi; break;
                  default: id = pb::TargetId::sf_e_lhs; break;
              }
              return pb::eval_target(id, pb::BigFloat::from_double(x, prec), prec).to_string(digits);
          },
          py::arg("target"), py::arg("x"), py::arg("prec") = 256, py::arg("digits") = 12);
}
