#include <iostream>
#include <string>
#include <vector>

#include "orient/cli.hpp"

namespace {

constexpr const char* kUsage = R"(usage:
  orient solve <file>                      run the matching solver
  orient oracle <file>                     force the exact solver
  orient verify <file> --order 1,3,2       check a witness order
  orient verify <file> --cover 1,2         check a vertex cover
  orient verify <file> --assignment 1,-2   check a truth assignment
  orient reduce <name> <in> <out>          vc2dcaop | dcaop2pr1 | nae2pr1 |
                                           simplify | pr1toP3
  orient map-witness <name> <dir> <src>    translate a witness across a
      --order/--cover/--assignment ...     reduction (dir: forward|backward)
  orient gen --kind <kind> --n N --m M --seed S [--k K] [--l L] [--out file]

Commands print one JSON document on stdout (a bare `gen` prints the raw
instance). Exit code 0: decided; 1: error.
)";

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        std::cout << kUsage;
        return args.empty() ? 1 : 0;
    }
    orient::cli::CommandResult result = orient::cli::run_command(args);
    std::cout << result.output;
    return result.exit_code;
}
