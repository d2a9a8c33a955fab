#pragma once

#include "exotica/derivation.hpp"
#include "exotica/surgery.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace exotica::cli {

  // EXOTICA_PROOF_DIR if set, otherwise the directory configured at build
  // time.
  std::filesystem::path proof_dir();

  // Resolves lemma NAME to <dir>/NAME.proof.
  LemmaRegistry::Loader proof_loader(std::filesystem::path dir);

  // Parses "chi:+1", "sigma:-1", "section_drop:+1", "blowdown:-1" into a
  // perturbed bookkeeping; nullopt on malformed input.
  std::optional<Bookkeeping> parse_injection(std::string const& text,
                                             Bookkeeping        base = {});

  // Entry point of the `exotica` executable; returns the exit code.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace exotica::cli
