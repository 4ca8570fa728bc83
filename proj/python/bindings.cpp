#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "faultlines/fault_injector.hpp"
#include "faultlines/model_gateway.hpp"
#include "faultlines/pipeline.hpp"
#include "faultlines/spm_engine.hpp"

namespace py = pybind11;
namespace fl = faultlines;

namespace {

fl::SeedProgram make_seed(const std::string& code, const std::string& language,
                          const std::string& spec, const std::string& seed_id) {
  fl::SeedProgram seed;
  seed.seed_id = seed_id;
  seed.subject_language = fl::language_from_string(language);
  seed.spec_text = spec.empty() ? "unspecified" : spec;
  seed.source_text = code;
  seed.loc = fl::count_nonblank_lines(code);
  seed.token_estimate = fl::estimate_tokens(code);
  return seed;
}

py::dict index_summary(const fl::SyntaxIndex& index) {
  py::dict out;
  out["line_count"] = index.line_count;
  py::list loops;
  for (const auto& l : index.loop_sites) loops.append(py::make_tuple(l.line, l.form));
  out["loop_sites"] = loops;
  py::list booleans;
  for (const auto& b : index.boolean_op_sites) booleans.append(py::make_tuple(b.span.line, b.op));
  out["boolean_op_sites"] = booleans;
  py::list ariths;
  for (const auto& a : index.arith_op_sites) ariths.append(py::make_tuple(a.span.line, a.op));
  out["arith_op_sites"] = ariths;
  py::list functions;
  for (const auto& f : index.function_spans) {
    functions.append(py::make_tuple(f.name, f.start_line, f.end_line));
  }
  out["function_spans"] = functions;
  out["statement_boundaries"] = index.statement_boundaries.size();
  out["comment_spans"] = index.comment_spans.size();
  py::list identifiers;
  for (const auto& i : index.identifier_table) identifiers.append(i.name);
  out["renameable_identifiers"] = identifiers;
  return out;
}

py::dict fault_dict(const fl::FaultyProgram& fp) {
  py::dict out;
  out["source"] = fp.source_text;
  out["fault_line"] = fp.fault.fault_line;
  out["kind"] = fl::to_string(fp.fault.kind);
  out["quartile"] = fl::to_string(fp.fault.quartile);
  out["before_snippet"] = fp.fault.before_snippet;
  out["after_snippet"] = fp.fault.after_snippet;
  return out;
}

py::dict mutant_dict(const fl::MutantProgram& m) {
  py::dict out;
  out["source"] = m.source_text;
  out["tracked_fault_line"] = m.tracked_fault_line;
  py::list plan;
  for (const auto& step : m.plan) {
    py::dict s;
    s["kind"] = fl::to_string(step.requested.kind);
    s["strength"] = step.requested.strength;
    s["effective"] = step.effective_strength;
    s["quartile"] = fl::to_string(step.requested.quartile);
    plan.append(s);
  }
  out["plan"] = plan;
  py::list renames;
  for (const auto& [from, to] : m.renames) renames.append(py::make_tuple(from, to));
  out["renames"] = renames;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fault-localization task generation and scoring core";
  m.attr("__version__") = fl::kToolVersion;

  py::register_exception<fl::Error>(m, "FaultlinesError");

  m.def(
      "parse_source",
      [](const std::string& code, const std::string& language) {
        return index_summary(fl::parse_source(code, fl::language_from_string(language)));
      },
      py::arg("code"), py::arg("language"),
      "Mutation-site index summary for a source file");

  m.def(
      "quartile_of",
      [](int line, int line_count) {
        return static_cast<int>(fl::quartile_of(line, line_count));
      },
      py::arg("line"), py::arg("line_count"));

  m.def(
      "inject_fault",
      [](const std::string& code, const std::string& language, const std::string& kind,
         int quartile, uint64_t seed, const std::string& seed_id) {
        fl::SeedProgram prog = make_seed(code, language, "", seed_id);
        fl::FaultyProgram fp = fl::inject_fault(prog, fl::fault_kind_from_string(kind),
                                                static_cast<fl::Quartile>(quartile), seed);
        return fault_dict(fp);
      },
      py::arg("code"), py::arg("language"), py::arg("kind"), py::arg("quartile") = 1,
      py::arg("seed") = 42, py::arg("seed_id") = "adhoc");

  m.def(
      "apply_spm",
      [](const std::string& code, const std::string& language, const std::string& kind,
         int fault_line, int strength, int quartile, uint64_t seed) {
        fl::FaultyProgram fp;
        fp.parent = make_seed(code, language, "", "adhoc");
        fp.source_text = code;
        fp.fault.seed_id = "adhoc";
        fp.fault.fault_line = fault_line;
        bool had_nl = false;
        auto lines = fl::split_lines(code, &had_nl);
        std::string line = lines.at(static_cast<size_t>(fault_line - 1));
        size_t b = line.find_first_not_of(" \t");
        fp.fault.after_snippet = b == std::string::npos ? line : line.substr(b);
        auto provider = fl::make_template_provider();
        fl::MutantProgram mut =
            fl::apply_spm(fp, fl::spm_kind_from_string(kind), strength,
                          static_cast<fl::Quartile>(quartile), *provider, seed);
        return mutant_dict(mut);
      },
      py::arg("code"), py::arg("language"), py::arg("kind"), py::arg("fault_line"),
      py::arg("strength") = 1, py::arg("quartile") = 1, py::arg("seed") = 42,
      "One semantic-preserving operator applied to a program; tracks the given line");

  m.def(
      "standard_mutant_set",
      [](const std::string& code, const std::string& language, int fault_line, int strength,
         int quartile, uint64_t seed) {
        fl::FaultyProgram fp;
        fp.parent = make_seed(code, language, "", "adhoc");
        fp.source_text = code;
        fp.fault.seed_id = "adhoc";
        fp.fault.fault_line = fault_line;
        bool had_nl = false;
        auto lines = fl::split_lines(code, &had_nl);
        std::string line = lines.at(static_cast<size_t>(fault_line - 1));
        size_t b = line.find_first_not_of(" \t");
        fp.fault.after_snippet = b == std::string::npos ? line : line.substr(b);
        auto provider = fl::make_template_provider();
        fl::MutantSetResult set = fl::standard_mutant_set(
            fp, strength, static_cast<fl::Quartile>(quartile), *provider, seed);
        py::list mutants;
        for (const auto& m_ : set.mutants) mutants.append(mutant_dict(m_));
        py::dict out;
        out["mutants"] = mutants;
        out["errors"] = set.errors;
        return out;
      },
      py::arg("code"), py::arg("language"), py::arg("fault_line"), py::arg("strength") = 1,
      py::arg("quartile") = 1, py::arg("seed") = 42);

  m.def(
      "build_prompt",
      [](const std::string& code, const std::string& spec, const std::string& language) {
        fl::FaultLocTask task;
        task.source_text = code;
        task.spec_text = spec;
        task.subject_language = fl::language_from_string(language);
        task.line_count = fl::count_physical_lines(code);
        return fl::build_prompt(task);
      },
      py::arg("code"), py::arg("spec"), py::arg("language") = "PY");

  m.def(
      "parse_answer",
      [](const std::string& raw_text, int line_count) -> py::object {
        auto parsed = fl::parse_answer(raw_text, line_count);
        if (!parsed) return py::none();
        return py::int_(*parsed);
      },
      py::arg("raw_text"), py::arg("line_count"));

  m.def("estimate_tokens", &fl::estimate_tokens, py::arg("text"));

  m.def(
      "run_pipeline",
      [](const std::string& config_path) {
        fl::RunConfig config = fl::load_config(config_path);
        auto store = fl::open_run(config);
        fl::run_pipeline(*store, config);
        return store->report_dir().string();
      },
      py::arg("config_path"), "Full ingest-to-report run; returns the report directory");
}
