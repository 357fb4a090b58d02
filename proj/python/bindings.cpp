#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "clobber/extremal.hpp"
#include "clobber/oracle.hpp"
#include "clobber/solver.hpp"
#include "clobber/word_model.hpp"

namespace py = pybind11;
using namespace clobber;

namespace {

using PyMove = std::pair<std::size_t, std::string>;

Topology topology_arg(const std::string& s) {
  if (auto t = topology_from_string(s)) return *t;
  throw py::value_error("topology must be 'line' or 'cycle', got '" + s + "'");
}

Conformation board_arg(const std::string& board, const std::string& topology) {
  return parse(board, topology_arg(topology));
}

PyMove to_py(const Move& m) { return {m.from, std::string(1, to_char(m.dir))}; }

Move from_py(const PyMove& m) {
  if (m.second.size() != 1 || !direction_from_char(m.second[0]))
    throw py::value_error("direction must be 'L' or 'R', got '" + m.second + "'");
  return {m.first, *direction_from_char(m.second[0])};
}

std::vector<PyMove> to_py(const Strategy& s) {
  std::vector<PyMove> out;
  out.reserve(s.size());
  for (const Move& m : s) out.push_back(to_py(m));
  return out;
}

Strategy from_py(const std::vector<PyMove>& moves) {
  Strategy s;
  s.reserve(moves.size());
  for (const auto& m : moves) s.push_back(from_py(m));
  return s;
}

}  // namespace

PYBIND11_MODULE(_clobber, m) {
  m.doc() = "Solitaire Clobber on lines and cycles";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&] { return py::exception<Error>(m, "ClobberError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      py::object exc = type(e.what());
      exc.attr("reason") = std::string(reason_code(e.code()));
      exc.attr("index") = e.index() ? py::cast(*e.index()) : py::none();
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  m.def(
      "solve",
      [](const std::string& board, const std::string& topology, bool trace) {
        const auto c = board_arg(board, topology);
        const auto r = solve(c, SolveOptions{trace, nullptr});
        py::dict out;
        out["value"] = r.value;
        out["strategy"] = to_py(r.strategy);
        out["n"] = c.size();
        out["topology"] = std::string(to_string(c.topology()));
        if (r.trace) out["trace"] = py::make_tuple(r.trace->edges, r.trace->moves);
        return out;
      },
      py::arg("board"), py::arg("topology") = "line", py::arg("trace") = false,
      "Value and an optimal strategy as a dict.");

  m.def(
      "oracle_value",
      [](const std::string& board, const std::string& topology, std::size_t limit) {
        return oracle_value(board_arg(board, topology), limit);
      },
      py::arg("board"), py::arg("topology") = "line", py::arg("limit") = kDefaultOracleLimit);

  m.def(
      "oracle_strategy",
      [](const std::string& board, const std::string& topology, std::size_t limit) {
        return to_py(oracle_strategy(board_arg(board, topology), limit));
      },
      py::arg("board"), py::arg("topology") = "line", py::arg("limit") = kDefaultOracleLimit);

  m.def(
      "legal_moves",
      [](const std::string& board, const std::string& topology) {
        return to_py(legal_moves(board_arg(board, topology)));
      },
      py::arg("board"), py::arg("topology") = "line");

  m.def(
      "apply",
      [](const std::string& board, const PyMove& move, const std::string& topology) {
        return render(apply(board_arg(board, topology), from_py(move)));
      },
      py::arg("board"), py::arg("move"), py::arg("topology") = "line");

  m.def(
      "replay",
      [](const std::string& board, const std::vector<PyMove>& moves, const std::string& topology) {
        return render(replay(board_arg(board, topology), from_py(moves)));
      },
      py::arg("board"), py::arg("moves"), py::arg("topology") = "line");

  m.def(
      "encode",
      [](const std::string& board, const std::string& topology) {
        return to_string(encode(board_arg(board, topology)));
      },
      py::arg("board"), py::arg("topology") = "line", "Edge word over s (same) and d (differ).");

  m.def(
      "value_from_word",
      [](const std::string& edges, const std::string& topology) {
        return value_from_word(edge_word_from_string(edges, topology_arg(topology)));
      },
      py::arg("edges"), py::arg("topology") = "line");

  m.def(
      "canonical_form",
      [](const std::string& board, const std::string& topology) {
        return canonical_form(board_arg(board, topology));
      },
      py::arg("board"), py::arg("topology") = "line");

  m.def(
      "sweep_max",
      [](std::size_t n, const std::string& topology, bool both, std::size_t limit) {
        const auto r = sweep_max(n, topology_arg(topology), both, limit);
        py::dict out;
        out["n"] = r.n;
        out["topology"] = std::string(to_string(r.topology));
        out["classes"] = r.classes;
        out["max_value"] = r.max_value;
        out["argmax"] = r.argmax;
        return out;
      },
      py::arg("n"), py::arg("topology") = "cycle", py::arg("both_colors") = true,
      py::arg("limit") = kDefaultSweepLimit);

  m.def(
      "generate_family",
      [](std::size_t n) {
        const auto f = generate_family(n);
        py::dict out;
        out["n"] = f.n;
        out["board"] = render(f.conformation);
        out["topology"] = "cycle";
        out["claimed_value"] = f.claimed_value;
        return out;
      },
      py::arg("n"));

  m.def(
      "check_upper_bound",
      [](std::size_t n_max, std::size_t limit) {
        py::list rows;
        for (const auto& r : check_upper_bound(n_max, limit).rows) {
          py::dict row;
          row["n"] = r.n;
          row["max_value"] = r.max_value;
          row["residual"] = r.residual;
          row["flagged"] = r.flagged;
          rows.append(row);
        }
        return rows;
      },
      py::arg("n_max"), py::arg("limit") = kDefaultSweepLimit);
}
