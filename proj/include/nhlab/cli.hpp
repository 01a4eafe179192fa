#pragma once

// Request parsing, dispatch and output for the nhlab command line tool.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "nhlab/rational.hpp"

namespace nhlab::cli {

inline constexpr const char* kSchemaVersion = "nh-lab/1";

enum class Command { Roots, Irrep, Homology, Cohomology, Duality, Kostant, ComplexGroup, SelfTest };
enum class OutputFormat { Json, Table };
enum class Status { Ok, Mismatch, Error };

struct Request {
  Command command = Command::Roots;
  char type = 0;
  int rank = 0;
  std::optional<Weight> lambda;
  std::vector<int> parabolic;                       // 0-based simple indices, ascending
  std::optional<std::vector<std::size_t>> chain;    // 0-based positive-root ids
  OutputFormat output = OutputFormat::Json;
  unsigned threads = 1;
  std::size_t max_dim = 10'000;
  std::optional<std::filesystem::path> cache_dir;
};

struct Report {
  nlohmann::ordered_json request;  // echo without threads, output, max-dim and cache-dir
  nlohmann::ordered_json results;
  Status status = Status::Ok;
  std::string error;  // set when status is Error
};

/// Help text was requested; carries the text to print.
struct HelpRequested {
  std::string text;
};

/// args excludes the program name. Throws nhlab::Error (usage) naming the
/// first offending token, or HelpRequested.
Request parse(std::span<const std::string> args);

/// Library failures become a Report with status Error.
Report execute(const Request& req);

std::string render(const Report& report, OutputFormat format);
int exit_code(const Report& report);

/// Whole front end: parse, execute, print. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

std::string to_string(Command c);
std::string to_string(Status s);

}  // namespace nhlab::cli
