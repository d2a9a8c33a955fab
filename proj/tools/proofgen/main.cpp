#include "exotica/decompositions.hpp"
#include "exotica/word_parser.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;

namespace {

  void write_proof(fs::path const&            path,
                   std::string const&         comment,
                   exotica::Derivation const& d) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw exotica::Error("cannot write " + path.string());
    }
    out << "# " << comment << '\n' << exotica::format_proof(d);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Writes the bundled Dehn twist derivations"};
  std::string dir = ".";
  std::vector<int> factor_ns{3};
  app.add_option("dir", dir, "output directory");
  app.add_option("--factor", factor_ns, "n values for eqfactor_n<N>.proof")
      ->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  try {
    fs::create_directories(dir);
    write_proof(fs::path(dir) / "decompA.proof",
                "D1 D2 as A1^8 A2^{~B A1^5} B^{A1^4} A2^{~B A1} B",
                exotica::decomposition_a_derivation());
    write_proof(fs::path(dir) / "decompB.proof",
                "D1 D2 as A1^6 A2^3 B^{A1^4 A2^2} B^{A1^2 A2} B",
                exotica::decomposition_b_derivation());
    for (int n : factor_ns) {
      write_proof(fs::path(dir) / ("eqfactor_n" + std::to_string(n) + ".proof"),
                  "D1^" + std::to_string(n) + " D2^" + std::to_string(n)
                      + " as A1^" + std::to_string(8 * n - 2) + " A2^3 and "
                      + std::to_string(4 * n - 1) + " more twists",
                  exotica::generate_factor_derivation(n));
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
