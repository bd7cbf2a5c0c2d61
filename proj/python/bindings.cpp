#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ocg/engine.hpp"
#include "ocg/minimax.hpp"
#include "ocg/record.hpp"
#include "ocg/report.hpp"
#include "ocg/schedule.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json py_to_json(const py::object& o) {
    return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(ocgame, m) {
    m.doc() = "Schedules, safe-digraph strategies and a referee for the biased oriented-cycle game";

    py::register_exception<ocg::PrecisionError>(m, "PrecisionError");
    py::register_exception<ocg::RuleViolation>(m, "RuleViolation");

    m.def("Q", [](std::int64_t x, std::int64_t D, std::int64_t s, std::int64_t d, std::int64_t i) {
        return ocg::eval_Q(x, D, s, d, i);
    }, "x"_a, "D"_a, "s"_a, "d"_a, "i"_a);
    m.def("G", [](std::int64_t b, double t) { return ocg::eval_G<double>(b, t); }, "b"_a, "t"_a);
    m.def("g", [](std::int64_t b, double t) { return ocg::eval_g<double>(b, t); }, "b"_a, "t"_a);
    m.def("g_inverse", [](std::int64_t b, double x) { return ocg::eval_g_inverse<double>(b, x); }, "b"_a, "x"_a);
    m.def("floor_g", [](std::int64_t b, std::int64_t i) { return ocg::floor_g(b, i); }, "b"_a, "i"_a);
    m.def("horizon", [](std::int64_t b) { return ocg::horizon(b); }, "b"_a);
    // C_B to 50 digits, as a decimal string
    m.def("C", [](std::int64_t B) {
        std::ostringstream s;
        s.precision(50);
        s << ocg::eval_C<ocg::Real>(B);
        return s.str();
    }, "B"_a);
    m.def("required_bias", &ocg::required_bias, "n"_a, "B"_a = 10);

    m.def("schedule_rows", [](std::int64_t b) {
        py::list out;
        for (const auto& r : ocg::schedule_rows(b).rows)
            out.append(py::dict("i"_a = r.i, "g_floor"_a = r.g_floor, "tau"_a = r.tau, "pi"_a = r.pi, "s"_a = r.s));
        return out;
    }, "b"_a);
    m.def("greedy_schedule", [](std::int64_t b) {
        const ocg::GreedyResult g = ocg::greedy_schedule(b);
        return py::dict("terminal_s"_a = g.terminal_s, "terminal_delta"_a = g.terminal_delta,
                        "rounds"_a = g.trajectory.size());
    }, "b"_a);
    m.def("constants_csv", &ocg::constants_csv, "Bs"_a);

    m.def("play_game", [](int n, std::int64_t b, const std::string& omaker, const std::string& obreaker, bool verify,
                          std::uint64_t seed, std::int64_t B_cap) {
        ocg::GameRecord rec;
        {
            py::gil_scoped_release release;
            rec = ocg::play_game(n, b, omaker, obreaker, verify, seed, B_cap);
        }
        return json_to_py(ocg::to_json(rec));
    }, "n"_a, "b"_a, "omaker"_a = "longest_path", "obreaker"_a = "paper", "verify"_a = false, "seed"_a = 0,
       "B_cap"_a = 10);
    m.def("verify_record", [](const py::object& rec) {
        const ocg::RecordCheck c = ocg::verify_record(ocg::record_from_json(py_to_json(rec)));
        return py::make_tuple(c.ok, c.reason);
    }, "record"_a);
    m.def("solve_game", [](int n, std::int64_t b) { return ocg::to_string(ocg::solve_game(n, b).winner); },
          "n"_a, "b"_a);
}
