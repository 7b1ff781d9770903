#include <algorithm>
#include <iostream>
#include <vector>

#include "cellar/cli.hpp"

namespace {

const char* kUsage = R"(cellar: exact workbench for bound quiver algebras and cellular structures

subcommands:
  basis INPUT          normal-word basis, dimension, pair dimensions
  cartan INPUT         Cartan matrix (c_ij = dim e_j A e_i)
  projectives INPUT    projective modules with radical layers, socle, top
  gabriel INPUT        Gabriel quiver arrow counts from J/J^2
  ext-sym INPUT        Ext^1 symmetry of the Gabriel quiver
  weak-sym INPUT       weak symmetry (Soc P_i = L_i = Top P_i)
  truncate INPUT --vertices a,b,...   idempotent truncation eAe
  gram-factor (--cartan M | INPUT)    all D with D^T D = C, canonical
  order-check (--cartan M | INPUT | --candidate D) [--self-injective]
  verify-cell INPUT --datum FILE|bundled    Graham-Lehrer axioms + D^T D = C
  chain INPUT --datum FILE|bundled          two-sided ideal chain checks
  report INPUT [--datum ...]   full necessary-condition pipeline
  catalog list | catalog build NAME [--param k=v] [--out F] [--datum-out F]

INPUT is a presentation file or catalog:NAME[?k=v&k=v].
flags: --out FILE, --json, --human, --cap N, --trace-cap N, --vertices a,b,c,
       --datum FILE|bundled, --self-injective, --timings
env:   CELLAR_SEED fixes the module-isomorphism fallback seed.

exit codes: 0 computed/verified, 1 failed or NOT-CELLULAR, 2 input error,
            3 resource cap exceeded.
)";

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    std::cout << kUsage;
    return args.empty() ? 2 : 0;
  }
  cellar::CliResult res = cellar::run_cli(args);
  bool human = std::find(args.begin(), args.end(), "--human") != args.end();
  bool json = std::find(args.begin(), args.end(), "--json") != args.end();
  if (human && !json)
    std::cout << res.human;
  else
    std::cout << res.json;
  return res.exit_code;
}
