#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <hgwiener/hgwiener.hpp>

namespace {

// Family-specific flag problems are usage errors (exit 2), unlike domain
// errors raised by the library (exit 1).
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hgwiener::error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int require(const std::optional<int>& value, const char* flag,
            const char* family) {
  if (!value)
    throw usage_error(std::string(flag) + " is required for family '" +
                      family + "'");
  return *value;
}

hgwiener::Hypergraph make_family(const std::string& family,
                                 const std::optional<int>& n,
                                 const std::optional<int>& k,
                                 const std::optional<int>& x) {
  if (x && family != "offset-tight-path")
    throw usage_error("--x only applies to family 'offset-tight-path'");
  if (family == "fano") {
    if (n || k) throw usage_error("family 'fano' takes no --n or --k");
    return hgwiener::fano();
  }
  const char* f = family.c_str();
  if (family == "tight-path")
    return hgwiener::tight_path(require(n, "--n", f), require(k, "--k", f));
  if (family == "offset-tight-path")
    return hgwiener::offset_tight_path(require(n, "--n", f),
                                       require(k, "--k", f),
                                       require(x, "--x", f));
  if (family == "loose-path")
    return hgwiener::loose_path(require(n, "--n", f), require(k, "--k", f));
  if (family == "loose-star")
    return hgwiener::loose_star(require(n, "--n", f), require(k, "--k", f));
  if (family == "complete")
    return hgwiener::complete(require(n, "--n", f), require(k, "--k", f));
  if (family == "dense-star")
    return hgwiener::dense_star(require(n, "--n", f), require(k, "--k", f));
  throw usage_error("unknown family '" + family +
                    "' (expected tight-path, offset-tight-path, loose-path, "
                    "loose-star, complete, dense-star, or fano)");
}

int run_identities(int s_max, int k_max) {
  if (s_max < 0 || k_max < 2)
    throw usage_error("identities requires --s-max >= 0 and --k-max >= 2");
  long long checked = 0;
  for (long long s = 0; s <= s_max; ++s) {
    for (long long k = 2; k <= k_max; ++k) {
      for (long long r = 0; r < k; ++r) {
        for (long long ell = 1; ell < k; ++ell) {
          const auto res = hgwiener::identity_residuals(s, k, r, ell);
          ++checked;
          if (res.carry) {
            const long long want = (k - ell - r) * (k - ell - r);
            if (*res.carry != want) {
              std::cout << "FAIL s=" << s << " k=" << k << " r=" << r
                        << " ell=" << ell << " case=carry value=" << *res.carry
                        << " expected=" << want << "\n";
              return 1;
            }
          } else {
            const long long want = ell * r;
            if (*res.plain != want) {
              std::cout << "FAIL s=" << s << " k=" << k << " r=" << r
                        << " ell=" << ell << " case=plain value=" << *res.plain
                        << " expected=" << want << "\n";
              return 1;
            }
          }
        }
      }
    }
  }
  std::cout << "OK " << checked << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge-distance and Wiener-index toolkit for k-uniform "
               "hypergraphs"};
  app.require_subcommand(1);

  std::string input_path;
  auto* cmd_wiener = app.add_subcommand(
      "wiener", "Wiener index of the hypergraph in FILE ('-' for stdin)");
  cmd_wiener->add_option("file", input_path, "hypergraph file or '-'")
      ->required();

  std::string dist_path;
  int dist_u = 0;
  int dist_v = 0;
  auto* cmd_dist =
      app.add_subcommand("dist", "Berge distance between two vertices");
  cmd_dist->add_option("file", dist_path, "hypergraph file or '-'")->required();
  cmd_dist->add_option("u", dist_u, "first vertex")->required();
  cmd_dist->add_option("v", dist_v, "second vertex")->required();

  std::string family;
  std::optional<int> gen_n, gen_k, gen_x;
  std::string out_path;
  auto* cmd_gen = app.add_subcommand("gen", "generate a named family");
  cmd_gen->add_option("family", family,
                      "tight-path | offset-tight-path | loose-path | "
                      "loose-star | complete | dense-star | fano")
      ->required();
  cmd_gen->add_option("--n", gen_n, "order");
  cmd_gen->add_option("--k", gen_k, "uniformity");
  cmd_gen->add_option("--x", gen_x, "offset for offset-tight-path");
  cmd_gen->add_option("-o,--output", out_path, "write to file instead of stdout");

  int bound_n = 0;
  int bound_k = 0;
  auto* cmd_bound = app.add_subcommand(
      "bound", "maximum Wiener index over connected k-uniform hypergraphs");
  cmd_bound->add_option("--n", bound_n, "order")->required();
  cmd_bound->add_option("--k", bound_k, "uniformity")->required();

  int s_max = 10;
  int k_max = 8;
  auto* cmd_identities = app.add_subcommand(
      "identities", "check the closing identities over a parameter grid");
  cmd_identities->add_option("--s-max", s_max, "largest block count (default 10)");
  cmd_identities->add_option("--k-max", k_max, "largest uniformity (default 8)");

  int verify_n = 0;
  int verify_k = 0;
  std::optional<int> verify_max_edges;
  int verify_jobs = 1;
  auto* cmd_verify = app.add_subcommand(
      "verify", "exhaustively verify the extremal theorem at small scale");
  cmd_verify->add_option("--n", verify_n, "order")->required();
  cmd_verify->add_option("--k", verify_k, "uniformity")->required();
  cmd_verify->add_option("--max-edges", verify_max_edges,
                         "bound the edge count instead of a full sweep");
  cmd_verify->add_option("--jobs", verify_jobs,
                         "worker count (does not affect output bytes)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_wiener)) {
      const auto h = hgwiener::parse(read_input(input_path));
      std::cout << hgwiener::wiener(h) << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_dist)) {
      const auto h = hgwiener::parse(read_input(dist_path));
      const auto d = hgwiener::distance(h, dist_u, dist_v);
      if (d)
        std::cout << *d << "\n";
      else
        std::cout << "unreachable\n";
      return 0;
    }
    if (app.got_subcommand(cmd_gen)) {
      const auto h = make_family(family, gen_n, gen_k, gen_x);
      const std::string text = hgwiener::to_text(h);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw hgwiener::error("cannot open output file: " + out_path);
        out << text;
      }
      return 0;
    }
    if (app.got_subcommand(cmd_bound)) {
      std::cout << hgwiener::max_wiener(bound_n, bound_k) << "\n";
      return 0;
    }
    if (app.got_subcommand(cmd_identities)) {
      return run_identities(s_max, k_max);
    }
    if (app.got_subcommand(cmd_verify)) {
      hgwiener::SearchLimit limit;
      limit.max_edges = verify_max_edges;
      const auto report =
          hgwiener::run_verification(verify_n, verify_k, limit, verify_jobs);
      std::cout << report.to_text();
      return report.passed() ? 0 : 1;
    }
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const hgwiener::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
