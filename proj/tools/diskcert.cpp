#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "diskcert/errors.hpp"
#include "diskcert/oracle.hpp"
#include "diskcert/pipeline.hpp"
#include "diskcert/report.hpp"
#include "diskcert/shape_io.hpp"
#include "diskcert/svg.hpp"

namespace {

using namespace diskcert;

enum Exit { kDisk = 0, kNotDisk = 1, kInputError = 2, kInternalError = 3 };

struct Output {
  bool json = false;
  bool timing = false;
};

void print(const ReportDocument& doc, const Output& out) {
  if (out.json) {
    std::cout << emit_report(doc) << "\n";
  } else {
    std::cout << emit_text(doc);
  }
}

template <typename Body>
int guarded(const std::string& command, const Output& out, Body&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.command = command;
  int code = kInternalError;
  try {
    code = body(doc);
  } catch (const InputError& e) {
    doc.error = e.what();
    code = kInputError;
  } catch (const ContractViolation& e) {
    doc.error = e.what();
    code = command == "crosscheck" ? kInputError : kInternalError;
  } catch (const std::exception& e) {
    doc.error = e.what();
    code = kInternalError;
  }
  if (out.timing) {
    doc.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  if (doc.error) std::cerr << "diskcert " << command << ": " << *doc.error << "\n";
  print(doc, out);
  return code;
}

int verdict_code(bool disk) { return disk ? kDisk : kNotDisk; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether a planar cubical set is a closed disk and parameterize its boundary"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Output out;
  std::string file;
  std::string svg_path;
  int width = 0;
  int height = 0;
  bool extras = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", out.json, "Print the structured JSON report");
    sub->add_flag("--timing", out.timing, "Include wall-clock time in the report");
  };

  auto* check = app.add_subcommand("check", "Evaluate the four conditions and the oracle");
  check->add_option("file", file, "Shape file")->required();
  add_common(check);

  auto* param = app.add_subcommand("param", "Run the full boundary parameterization");
  param->add_option("file", file, "Shape file")->required();
  param->add_option("--svg", svg_path, "Write a drawing of the result to this path");
  add_common(param);

  auto* oracle = app.add_subcommand("oracle", "Run only the combinatorial disk oracle");
  oracle->add_option("file", file, "Shape file")->required();
  add_common(oracle);

  auto* cross = app.add_subcommand("crosscheck", "Compare criterion and oracle on every cell subset");
  cross->add_option("--width", width, "Grid width")->required();
  cross->add_option("--height", height, "Grid height")->required();
  cross->add_flag("--extras", extras, "Also run the curated dangling edge/vertex suite");
  cross->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(cross);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*check) {
    return guarded("check", out, [&](ReportDocument& doc) {
      const CubicalSet set = load_shape_file(file);
      doc.input = set;
      doc.criterion = evaluate(set);
      doc.oracle = is_disk_oracle(set);
      const bool disk = doc.criterion->verdict == Verdict::disk;
      if (disk != doc.oracle->is_disk) {
        doc.error = "criterion and oracle disagree";
        return int{kInternalError};
      }
      return verdict_code(disk);
    });
  }
  if (*param) {
    return guarded("param", out, [&](ReportDocument& doc) {
      const CubicalSet set = load_shape_file(file);
      doc.input = set;
      Certificate cert = certify(set);
      doc.criterion = cert.criterion;
      doc.oracle = cert.oracle;
      if (!svg_path.empty()) {
        std::ofstream svg(svg_path, std::ios::binary);
        if (!svg) throw InputError("cannot write " + svg_path);
        svg << emit_svg(cert);
      }
      const bool disk = cert.is_disk();
      doc.certificate = std::move(cert);
      return verdict_code(disk);
    });
  }
  if (*oracle) {
    return guarded("oracle", out, [&](ReportDocument& doc) {
      const CubicalSet set = load_shape_file(file);
      doc.input = set;
      doc.oracle = is_disk_oracle(set);
      return verdict_code(doc.oracle->is_disk);
    });
  }
  return guarded("crosscheck", out, [&](ReportDocument& doc) {
    doc.crosscheck = enumerate_crosscheck(width, height, extras, jobs);
    return doc.crosscheck->disagreements.empty() ? int{kDisk} : int{kInternalError};
  });
}
