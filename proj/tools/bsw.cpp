#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bsw/cli/report.hpp"
#include "bsw/error.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bsw::ValidationError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bsw::cli::Session load(const std::string& path) {
  try {
    return bsw::cli::parse_session(read_file(path));
  } catch (const bsw::SyntaxError& e) {
    std::string msg = e.what();
    if (auto cut = msg.rfind(" at line "); cut != std::string::npos) msg.resize(cut);
    throw bsw::SyntaxError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + msg,
                           e.line(), e.column());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolution strata, closure containments and Lojasiewicz estimates from session files"};
  app.require_subcommand(1);

  std::string file, out;
  std::size_t budget = 0;
  std::uint64_t seed = 0;

  auto* run = app.add_subcommand("run", "Execute a session and emit the JSON report");
  run->add_option("session", file, "Session file")->required();
  run->add_option("--out", out, "Write the JSON report here and print the summary instead");
  auto* budget_opt = run->add_option("--budget", budget, "Step budget per Groebner computation")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Seed for numerical sampling");

  auto* check = app.add_subcommand("check", "Parse a session without running it");
  check->add_option("session", file, "Session file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const auto session = load(file);
    if (check->parsed()) {
      std::cout << file << ": ok, " << session.bindings.size() << " bindings, " << session.commands.size()
                << " commands\n";
      return 0;
    }

    bsw::cli::RunOptions opts;
    opts.budget = budget_opt->count() ? budget : bsw::cli::default_budget();
    opts.seed = seed;
    opts.session_name = file;
    opts.timestamp = utc_now();
    const auto report = bsw::cli::run_session(session, opts);

    if (out.empty()) {
      std::cout << report.dump(2) << "\n";
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!f) throw bsw::ValidationError("cannot write '" + out + "'");
      f << report.dump(2) << "\n";
      std::cout << bsw::cli::human_summary(report);
    }
    return bsw::cli::exit_code(report);
  } catch (const bsw::Error& e) {
    std::cerr << "bsw: " << bsw::kind_name(e.kind()) << " error: " << e.what() << "\n";
    return e.kind() == bsw::Error::Kind::Budget ? 3 : 2;
  }
}
