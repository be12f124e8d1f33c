#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sagbi/error.hpp"
#include "sagbi/interpreter.hpp"

namespace {

// Exit statuses, one per diagnostic category.
int exitCode(sagbi::ErrorKind kind) {
  switch (kind) {
    case sagbi::ErrorKind::Parse: return 3;
    case sagbi::ErrorKind::Reference: return 4;
    case sagbi::ErrorKind::InvalidInput: return 5;
    case sagbi::ErrorKind::Domain: return 6;
    case sagbi::ErrorKind::RingMismatch: return 7;
    case sagbi::ErrorKind::Incomplete: return 8;
    case sagbi::ErrorKind::Io: return 9;
    case sagbi::ErrorKind::StateFormat: return 10;
  }
  return 1;
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) sagbi::fail(sagbi::ErrorKind::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subalgebra (SAGBI) basis computations over the rationals"};
  std::string scriptPath;
  std::string command;
  std::string stateIn;
  std::string stateOut;
  std::string format = "text";
  int printLevel = 0;

  auto* scriptOpt = app.add_option("--script", scriptPath, "Script file to execute");
  auto* evalOpt = app.add_option("--eval", command, "Statements to execute");
  scriptOpt->excludes(evalOpt);
  app.add_option("--print-level", printLevel, "Trace verbosity: 1 per degree, 2 per subduction step")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--state-in", stateIn, "Computation object to load before running (registered as its saved name)");
  app.add_option("--state-out", stateOut, "Write the last computed or loaded computation object here");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (scriptOpt->count() == 0 && evalOpt->count() == 0) {
    std::cerr << "sagbi: exactly one of --script or --eval is required\n";
    return 2;
  }

  sagbi::InterpreterOptions options;
  options.printLevel = printLevel;
  options.format = format == "structured" ? sagbi::OutputFormat::Structured : sagbi::OutputFormat::Text;
  sagbi::Interpreter interp(std::cout, options);
  try {
    if (!stateIn.empty()) interp.loadState(stateIn);
    interp.execute(scriptOpt->count() ? readFile(scriptPath) : command);
    if (!stateOut.empty()) interp.saveState(stateOut);
    interp.finish();
    return 0;
  } catch (const sagbi::Error& e) {
    interp.finish(&e);
    std::cerr << "sagbi: " << sagbi::errorKindName(e.kind()) << " error: " << e.what() << '\n';
    return exitCode(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "sagbi: internal error: " << e.what() << '\n';
    return 1;
  }
}
