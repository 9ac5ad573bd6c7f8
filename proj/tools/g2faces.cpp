// Command-line front end: verification reports for algebras, forms and the
// full regression battery.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "g2/errors.hpp"
#include "g2/report.hpp"
#include "g2/stabilizers.hpp"

namespace {

enum Exit { kOk = 0, kClaimFailed = 1, kUsage = 2, kNotRegular = 3, kIo = 4 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

g2::KForm load_form(const std::string& source, int dim) {
  if (auto f = g2::builtin_form(source)) return *f;
  return g2::parse_form(read_file(source), dim);
}

int emit(const g2::Report& r) {
  std::cout << r.text();
  return r.all_pass() ? kOk : kClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of composition algebras, the generic 3-form in seven dimensions and G2"};
  app.require_subcommand(1);

  std::string algebra_source;
  auto* verify = app.add_subcommand("verify-algebra", "Composition, division, alternativity and norm checks");
  verify->add_option("algebra", algebra_source, "Builtin name or table file (dim N / i j c k lines)")->required();

  std::string form_source = "phi7";
  int form_dim = 7;
  bool with_basis = false;
  auto* stab = app.add_subcommand("stabilizer", "Stabilizer algebra of a form");
  stab->add_option("--form", form_source, "Builtin form or form file")->capture_default_str();
  stab->add_option("--dim", form_dim, "Ambient dimension for form files")->capture_default_str();
  stab->add_flag("--basis", with_basis, "Print the stabilizer basis");

  auto* faces = app.add_subcommand("two-faces", "Compare stab(phi) with the derivations of the reconstructed algebra");
  faces->add_option("--form", form_source, "Builtin 3-form or form file on Q^7")->capture_default_str();

  auto* recon = app.add_subcommand("reconstruct", "Rebuild the octonion product from a 3-form");
  recon->add_option("--form", form_source, "Builtin 3-form or form file on Q^7")->capture_default_str();

  auto* fano = app.add_subcommand("fano", "Fano lines, collineations and signed automorphisms");
  fano->add_option("--form", form_source, "Builtin 3-form or form file on Q^7")->capture_default_str();

  int id_dim = 8;
  bool id_split = false;
  auto* ids = app.add_subcommand("identities", "Sum-of-squares identities from the multiplication table");
  ids->add_option("--dim", id_dim, "1, 2, 4, 8 or 16")->capture_default_str()->check(CLI::IsMember({1, 2, 4, 8, 16}));
  ids->add_flag("--split", id_split, "Use the split algebra");

  std::string json_path;
  auto* all = app.add_subcommand("report-all", "Run the full regression battery");
  all->add_option("--json", json_path, "Write the JSON report to a path, or - for standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) {
      g2::AlgebraPtr a = g2::algebras::builtin(algebra_source);
      if (!a) {
        std::ifstream probe(algebra_source);
        if (!probe) throw UsageError("unknown algebra '" + algebra_source + "'");
        a = g2::parse_algebra_table(read_file(algebra_source), algebra_source);
      }
      return emit(g2::verify_algebra_report(a, algebra_source));
    }
    if (stab->parsed()) return emit(g2::stabilizer_report(load_form(form_source, form_dim), form_source, with_basis));
    if (faces->parsed()) return emit(g2::two_faces_report(load_form(form_source, 7), form_source));
    if (recon->parsed()) return emit(g2::reconstruct_report(load_form(form_source, 7), form_source));
    if (fano->parsed()) return emit(g2::fano_report(load_form(form_source, 7), form_source));
    if (ids->parsed()) return emit(g2::identities_report(id_dim, id_split));
    if (all->parsed()) {
      // open the destination first so a bad path fails before the battery runs
      std::ofstream out;
      if (!json_path.empty() && json_path != "-") {
        out.open(json_path);
        if (!out) throw IoError("cannot write " + json_path);
      }
      const g2::Report r = g2::report_all();
      if (json_path.empty()) {
        std::cout << r.text();
      } else {
        const std::string payload = r.to_json().dump(2) + "\n";
        if (json_path == "-") {
          std::cout << payload;
        } else if (!(out << payload)) {
          throw IoError("cannot write " + json_path);
        }
      }
      return r.all_pass() ? kOk : kClaimFailed;
    }
  } catch (const g2::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const g2::NotRegular& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotRegular;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const g2::FanoAxiomError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
