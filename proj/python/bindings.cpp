#include "sturmian/exponent.hpp"
#include "sturmian/oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sturmian;

namespace {

py::int_ to_py(const Integer& x) {
  std::string s = x.get_str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

Integer from_py(const py::handle& h) { return parse_integer(py::str(h)); }

py::list to_py(const std::vector<Integer>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

std::vector<Integer> from_py_list(const py::iterable& xs) {
  std::vector<Integer> out;
  for (auto h : xs) out.push_back(from_py(h));
  return out;
}

py::tuple to_py(const Rational& x) {
  Rational y = x;
  y.canonicalize();
  return py::make_tuple(to_py(y.get_num()), to_py(y.get_den()));
}

py::dict digits_dict(const InterceptDigits& d) {
  py::dict out;
  out["digits"] = to_py(d.b);
  out["terminating"] = d.terminating;
  return out;
}

InterceptDigits digits_from(const py::iterable& digits, bool terminating) {
  return {from_py_list(digits), terminating};
}

ConvergentTable table_of(const SlopeSpec& s) { return build_table(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::InvalidInput: PyErr_SetString(PyExc_ValueError, e.what()); break;
        case ErrorKind::Horizon: PyErr_SetString(PyExc_OverflowError, e.what()); break;
        case ErrorKind::Internal: PyErr_SetString(PyExc_RuntimeError, e.what()); break;
      }
    }
  });

  py::class_<SlopeSpec>(m, "Slope")
      .def(py::init([](const py::iterable& pre, const py::iterable& per, std::optional<int> horizon) {
             SlopeSpec s;
             s.preperiod = from_py_list(pre);
             s.period = from_py_list(per);
             s.horizon = horizon ? *horizon : static_cast<int>(s.preperiod.size());
             s.validate();
             return s;
           }),
           py::arg("preperiod"), py::arg("period") = py::list(), py::arg("horizon") = py::none())
      .def_static("golden", &SlopeSpec::golden, py::arg("horizon"))
      .def_property_readonly("horizon", [](const SlopeSpec& s) { return s.horizon; })
      .def("a", [](const SlopeSpec& s, int k) { return to_py(s.partial_quotient(k)); })
      .def("q", [](const SlopeSpec& s, int k) { return to_py(table_of(s).q(k)); })
      .def("p", [](const SlopeSpec& s, int k) { return to_py(table_of(s).p(k)); });

  m.def("encode_integer", [](const py::handle& n, const SlopeSpec& s) {
    return to_py(encode_integer(from_py(n), table_of(s)).d);
  });
  m.def("decode_integer", [](const py::iterable& d, const SlopeSpec& s) {
    return to_py(decode_integer(IntegerDigits{from_py_list(d)}, table_of(s)));
  });
  m.def(
      "encode_real",
      [](const std::string& u, const std::string& v, const SlopeSpec& s) {
        EncodeResult r = encode_real({parse_rational(u), parse_rational(v)}, table_of(s));
        py::dict out;
        if (r.digits) return digits_dict(*r.digits);
        out["m"] = to_py(r.ambiguous->m);
        out["p"] = to_py(r.ambiguous->p);
        out["b"] = digits_dict(r.ambiguous->b);
        out["b_prime"] = digits_dict(r.ambiguous->b_prime);
        return out;
      },
      py::arg("u"), py::arg("v"), py::arg("slope"));
  m.def("degenerate_expansions", [](const py::handle& mm, const py::handle& p, const SlopeSpec& s) {
    DegenerateIntercept d = degenerate_expansions(from_py(mm), from_py(p), table_of(s));
    py::dict out;
    out["l"] = d.l;
    out["lower"] = digits_dict(d.lower());
    out["upper"] = digits_dict(d.upper());
    return out;
  });
  m.def("boehmer", [](const SlopeSpec& s, const py::handle& base, int count) {
    ConvergentTable t = table_of(s);
    std::vector<Integer> out;
    for (int k = 1; k <= count; ++k) out.push_back(boehmer_term(t, from_py(base), k));
    return to_py(out);
  });
  m.def("extremal_intercept", [](const SlopeSpec& s, int K) {
    ExtremalIntercept e = extremal_intercept(table_of(s), K);
    py::dict out;
    out["digits"] = to_py(e.digits.b);
    out["spikes"] = e.spikes;
    return out;
  });

  py::class_<NumberSpec>(m, "SturmianNumber")
      .def_static("characteristic",
                  [](const SlopeSpec& s, const py::handle& base) {
                    return NumberSpec::characteristic(from_py(base), table_of(s));
                  },
                  py::arg("slope"), py::arg("base") = 2)
      .def_static("from_digits",
                  [](const SlopeSpec& s, const py::iterable& d, bool terminating, const py::handle& base) {
                    return NumberSpec::from_digits(from_py(base), table_of(s), digits_from(d, terminating));
                  },
                  py::arg("slope"), py::arg("digits"), py::arg("terminating") = false, py::arg("base") = 2)
      .def_static("degenerate",
                  [](const SlopeSpec& s, const py::handle& mm, const py::handle& p, bool upper, const py::handle& base) {
                    return NumberSpec::degenerate(from_py(base), table_of(s), from_py(mm), from_py(p), upper);
                  },
                  py::arg("slope"), py::arg("m"), py::arg("p"), py::arg("upper") = false, py::arg("base") = 2)
      .def_property_readonly("horizon", &NumberSpec::horizon)
      .def("letters",
           [](const NumberSpec& n, std::uint64_t count) {
             std::string out;
             for (std::uint64_t i = 1; i <= count; ++i) out.push_back(n.words.letter_at(i) ? '1' : '0');
             return out;
           })
      .def("v_word", [](const NumberSpec& n, int k) { return n.words.v_word(k).str(); })
      .def("cf",
           [](const NumberSpec& n, int K) {
             std::vector<Integer> out;
             for (const auto& t : cf_expansion(n, K).terms) out.push_back(t.value);
             return to_py(out);
           })
      .def("provenance",
           [](const NumberSpec& n, int K) {
             py::list out;
             for (const auto& t : cf_expansion(n, K).terms) out.append(py::make_tuple(to_py(t.value), t.tag.str()));
             return out;
           })
      .def("convergents",
           [](const NumberSpec& n, int K) {
             py::list out;
             for (const auto& c : convergents(n.base, cf_expansion(n, K).terms))
               out.append(py::make_tuple(to_py(c.P), to_py(c.Q), c.tag.str()));
             return out;
           })
      .def(
          "verify",
          [](const NumberSpec& n, int K, std::size_t want) {
            VerifyReport r = verify_expansion(n, K, want);
            py::dict out;
            out["N"] = r.N;
            out["certified"] = to_py(r.certified);
            out["matches"] = r.matches;
            out["first_mismatch"] = r.first_mismatch;
            out["compared"] = r.compared;
            return out;
          },
          py::arg("K"), py::arg("want") = 10)
      .def("nu_table",
           [](const NumberSpec& n, int K) {
             py::list out;
             for (const auto& row : nu_table(n.words, K))
               out.append(py::make_tuple(to_py(row.nu[0]), to_py(row.nu[1]), to_py(row.nu[2]), to_py(row.nu[3])));
             return out;
           })
      .def("estimate", [](const NumberSpec& n, int K) {
        ExponentEstimate e = exponent_estimate(n.words, K);
        py::dict out;
        out["mu"] = to_py(e.mu);
        out["mu_full"] = to_py(e.mu_full);
        out["window"] = py::make_tuple(e.window_lo, e.K);
        return out;
      });
}
