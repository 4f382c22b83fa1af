// Command-line calculator for Euclidean numbers, numerosities, ordinals and
// Euclidean calculus. One-shot when a command is given, REPL otherwise.

#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "euclid/cli.hpp"

namespace {

using euclid::cli::ExitCode;

enum class Format { text, structured };

struct Settings {
  Format format = Format::text;
  bool quiet = false;
};

void print_error(const std::string& line, const euclid::Error& e, bool quiet) {
  if (quiet) return;
  std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
  if (const auto* s = dynamic_cast<const euclid::cli::SyntaxError*>(&e)) {
    std::cerr << "  " << line << "\n  " << std::string(s->column() - 1, ' ') << "^\n";
  }
}

// Returns the exit code for this line.
int run_line(euclid::cli::Session& session, const std::string& line, const Settings& s) {
  try {
    const euclid::cli::Result r = session.run(line);
    std::cout << (s.format == Format::structured ? r.structured() : r.text) << '\n';
    return ExitCode::kOk;
  } catch (const euclid::cli::SyntaxError& e) {
    print_error(line, e, s.quiet);
    return ExitCode::kSyntaxError;
  } catch (const euclid::Error& e) {
    print_error(line, e, s.quiet);
    return ExitCode::kDomainError;
  }
}

int repl(euclid::cli::Session& session, const Settings& s) {
  const bool interactive = isatty(STDIN_FILENO) && !s.quiet;
  if (interactive) std::cout << "euclid: type a command, or an expression to evaluate; Ctrl-D quits\n";
  std::string line;
  for (;;) {
    if (interactive) std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.substr(first) == "quit" || line.substr(first) == "exit") break;
    run_line(session, line, s);
  }
  return ExitCode::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for Euclidean numbers, numerosities, ordinals and Euclidean calculus"};
  euclid::cli::Options options;
  Settings settings;
  std::vector<std::string> words;

  app.add_option("--order", options.order, "Series truncation order of derivative expansions")
      ->check(CLI::Range(2L, 64L));
  app.add_option("--precision", options.precision, "Significant digits of numeric zero and sign tests")
      ->check(CLI::Range(20, 10000));
  app.add_option("--format", settings.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::text},
                                                                        {"structured", Format::structured}}));
  app.add_flag("--quiet", settings.quiet, "No prompt, banner or error messages");
  app.add_option("command", words, "Command to run once, e.g. 'num(Q)'; omit for the REPL");
  app.prefix_command();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? ExitCode::kOk : ExitCode::kSyntaxError;
  }
  for (const auto& w : app.remaining()) words.push_back(w);

  euclid::cli::Session session(options);
  if (words.empty()) return repl(session, settings);
  std::string line;
  for (const auto& w : words) {
    if (!line.empty()) line += ' ';
    line += w;
  }
  return run_line(session, line, settings);
}
