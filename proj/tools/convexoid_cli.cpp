#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "convexoid/commands.hpp"
#include "convexoid/instance_file.hpp"
#include "convexoid/verify.hpp"

namespace cx = convexoid;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

std::string to_json(const cx::Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["status"] = r.ok ? "ok" : "failed";
  j["blocks"] = nlohmann::ordered_json::array();
  for (const auto& b : r.blocks) {
    nlohmann::ordered_json fields = nlohmann::ordered_json::object();
    for (const auto& f : b.fields) {
      if (f.list) fields[f.key] = f.values;
      else fields[f.key] = f.values.empty() ? "" : f.values.front();
    }
    j["blocks"].push_back({{"name", b.name}, {"fields", std::move(fields)}});
  }
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convexoid: conjugates and duality over finite convexoid instances"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out_path;
  app.add_option("--seed", seed, "seed for randomized sweeps")->capture_default_str();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--out", out_path, "write the report to this file instead of stdout");

  std::string file;
  cx::ConjugateOptions conj;
  std::string probe_mode = "sieve";
  auto* conjugate = app.add_subcommand("conjugate", "conjugate of a function from an instance file");
  conjugate->add_option("file", file, "instance file")->required();
  conjugate->add_option("--function", conj.function, "function section name")->required();
  conjugate->add_flag("--double", conj.show_double, "also print f** and the conjugation checks");
  conjugate->add_flag("--check-convex", conj.check_convex, "report whether f = f**");
  conjugate->add_option("--subdiff", conj.subdiff, "subdifferential at this element (repeatable)");
  conjugate->add_option("--probe-mode", probe_mode, "graph-topos probe assembly")
      ->check(CLI::IsMember({"sieve", "same-shape"}))
      ->capture_default_str();

  cx::DualityOptions dual;
  auto* duality = app.add_subcommand("duality", "primal and dual values of a duality system");
  duality->add_option("file", file, "instance file")->required();
  duality->add_option("--function", dual.function, "function section name")->required();
  duality->add_flag("--minimax", dual.minimax, "print the minimax pair");

  std::string scope;
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("scope", scope, "codomain, conjugate, structural, duality, topos or all")
      ->required()
      ->check(CLI::IsMember({"codomain", "conjugate", "structural", "duality", "topos", "all"}));

  auto* gallery = app.add_subcommand("gallery", "built-in instances");
  gallery->require_subcommand(1);
  gallery->add_subcommand("list", "list the built-in instances");
  std::string describe_name;
  auto* describe = gallery->add_subcommand("describe", "parameters of one instance");
  describe->add_option("name", describe_name, "instance name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  cx::Report report;
  try {
    if (*conjugate) {
      conj.mode = probe_mode == "sieve" ? cx::ProbeMode::sieve : cx::ProbeMode::same_shape;
      report = cx::cmd_conjugate(cx::load_instance_file(file), conj);
    } else if (*duality) {
      report = cx::cmd_duality(cx::load_instance_file(file), dual);
    } else if (*verify) {
      report = cx::cmd_verify(scope, seed);
    } else if (*describe) {
      report = cx::cmd_gallery_describe(describe_name);
    } else {
      report = cx::cmd_gallery_list();
    }
  } catch (const cx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const auto text = format == "json" ? to_json(report) : report.to_text();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitInput;
    }
  }
  return report.ok ? kExitOk : kExitVerification;
}
