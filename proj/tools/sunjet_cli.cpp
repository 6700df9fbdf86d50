// Command-line front end. Reports go to stdout as JSON, diagnostics to stderr.
// Exit codes: 0 all cases pass, 1 some case fails, 2 malformed input.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "sunjet/json_io.hpp"

using namespace sunjet;

namespace {

struct MalformedInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Case {
  std::string id;
  bool ok = false;
  json residual;
};

struct Suite {
  std::string name;
  std::vector<Case> cases;

  void add(std::string id, bool ok, json residual = nullptr) {
    cases.push_back({std::move(id), ok, ok ? json(nullptr) : std::move(residual)});
  }
  bool ok() const {
    return std::all_of(cases.begin(), cases.end(), [](const Case& c) { return c.ok; });
  }
  json report() {
    std::sort(cases.begin(), cases.end(), [](const Case& a, const Case& b) { return a.id < b.id; });
    json out = {{"suite", name}, {"cases", json::array()}};
    for (const auto& c : cases) {
      json j = {{"id", c.id}, {"status", c.ok ? "pass" : "fail"}};
      if (!c.ok) j["residual"] = c.residual.is_null() ? json("mismatch") : c.residual;
      out["cases"].push_back(j);
    }
    return out;
  }
};

std::string tag(int n) { return "n=" + std::to_string(n); }
std::string tag(int n, long k) { return tag(n) + " k=" + std::to_string(k); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

template <class F>
auto load(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const MalformedInput&) {
    throw;
  } catch (const std::exception& e) {
    throw MalformedInput(e.what());
  }
}

// Jet of a word from the jets of a, b_i, c and their inverses.
Jet word_jet(const GroupWord& w, const Jet& a, const std::vector<Jet>& b, const Jet& c) {
  Jet out = identity_jet(a.n, a.r);
  for (const auto& l : w) {
    const Jet& g = l.gen == 'a' ? a : (l.gen == 'b' ? b.at(l.index - 1) : c);
    out = compose(out, jet_power(g, static_cast<int>(l.power)));
  }
  return out;
}

Suite suite_relations(const std::vector<int>& ns, const std::vector<long>& ks, int r) {
  Suite s{"relations", {}};
  for (int n : ns)
    for (long k : ks) {
      LatticePresentation l = standard_lattice(n, k);
      Jet a = phi_chart_jet({{'a', 0, 1}}, l, r);
      std::vector<Jet> b;
      for (int i = 1; i <= 2 * n; ++i) b.push_back(phi_chart_jet({{'b', i, 1}}, l, r));
      Jet c = phi_chart_jet({{'c', 0, 1}}, l, r);
      for (const auto& [name, w] : relators(l)) {
        std::string id = tag(n, k) + " r=" + std::to_string(r) + " " + name;
        Jet j = word_jet(w, a, b, c);
        s.add(id + " (jets)", j == identity_jet(n, r), jet_to_json(j));
        ANElement e = evaluate_word(w, l);
        s.add(id + " (AN)", e == an_identity(n), an_to_json(e));
      }
    }
  return s;
}

Suite suite_brackets(const std::vector<int>& ns) {
  Suite s{"brackets", {}};
  for (int n : ns)
    for (const auto& c : bracket_relation_table(n)) s.add(c.id, c.ok, c.detail);
  return s;
}

bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& v : b)
    if (!coordinates(a, v)) return false;
  return true;
}

Suite suite_centralizer(const std::vector<int>& ns) {
  Suite s{"centralizer", {}};
  for (int n : ns) {
    auto conn = standard_connection(n);
    auto listed = standard_centralizer(n);
    auto z = centralizer(n, conn, 2);
    json got = json::array();
    for (const auto& v : z) got.push_back(field_to_json(v));
    s.add(tag(n) + " centralizer of the standard connection equals the listed span", same_span(z, listed), got);
    std::vector<Rational> origin(2 * n + 1);
    auto structure = standard_structure(n);
    auto h = verify_heisenberg(conn, structure, origin);
    s.add(tag(n) + " standard connection is Heisenberg", h.ok && h.frame_everywhere, h.failure);
    // The centralizer has the opposite bracket sign.
    HeisenbergStructure opposite{QMatrix(-structure.s)};
    auto hz = verify_heisenberg(listed, opposite, origin);
    s.add(tag(n) + " centralizer is Heisenberg", hz.ok && hz.frame_everywhere, hz.failure);
    auto e = find_dilation(conn, structure, Rational(1), origin);
    s.add(tag(n) + " dilation scales the connection", dilates(e.value(), conn, Rational(1)),
          field_to_json(e.value()));
    s.add(tag(n) + " dilation scales the centralizer", dilates(e.value(), listed, Rational(1)),
          field_to_json(e.value()));
    VectorField euler = induced_vector_field(gen_e(n));
    s.add(tag(n) + " -(x.d + 2 x_last d_last) dilates both by -1",
          dilates(euler, conn, Rational(-1)) && dilates(euler, listed, Rational(-1)));
  }
  return s;
}

Suite suite_theta(const std::vector<int>& ns) {
  Suite s{"theta", {}};
  for (int n : ns) {
    GradedLieHom plus = iota0_hom(n, HomDomain::NPlus);
    GradedLieHom minus = iota0_hom(n, HomDomain::NMinus);
    GradedLieHom th = theta(plus);
    json diff = json::array();
    for (size_t i = 0; i < th.images.size(); ++i)
      diff.push_back(field_to_json(th.images[i] - minus.images[i]));
    s.add(tag(n) + " theta iota0 = iota0 on n-", th.images == minus.images, diff);
    for (auto [name, hom] : {std::pair{"n+", plus}, std::pair{"n-", minus}}) {
      auto v = verify_graded_hom(hom);
      s.add(tag(n) + " iota0 on " + name + " is a graded homomorphism", v.ok, v.failures);
    }
    auto rep = verify_normalized_bracket_identities(plus);
    s.add(tag(n) + " normalization precondition", rep.precondition_ok);
    for (const auto& c : rep.cases) s.add(tag(n) + " " + c.id, c.ok, field_to_json(c.residual));
  }
  return s;
}

Suite suite_kernel(const std::vector<int>& ns) {
  Suite s{"kernel", {}};
  for (int n : ns) {
    KernelResult full = final_kernel(n, true, true);
    KernelResult norm_only = final_kernel(n, true, false);
    KernelResult rel_only = final_kernel(n, false, true);
    json basis = json::array();
    for (const auto& v : full.basis) basis.push_back(field_to_json(v));
    s.add(tag(n) + " final kernel is zero", full.dimension() == 0,
          {{"dimension", full.dimension()}, {"unknowns", full.unknowns}, {"basis", basis}});
    s.add(tag(n) + " dropping the second equation enlarges the kernel",
          norm_only.dimension() > full.dimension(), {{"dimension", norm_only.dimension()}});
    s.add(tag(n) + " dropping the first equation enlarges the kernel", rel_only.dimension() > full.dimension(),
          {{"dimension", rel_only.dimension()}});
  }
  return s;
}

int emit(json report, bool ok, bool timing, std::chrono::steady_clock::time_point start) {
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (timing) report["wall_time_seconds"] = secs;
  std::cerr << "wall time " << secs << " s\n";
  std::cout << report.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graded vector fields, jets and su(n+1,1) checks"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Include wall time in the report");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  std::vector<int> ns;
  std::vector<long> ks;
  int r = 4;
  std::string suite_name;
  for (const char* name : {"relations", "brackets", "centralizer", "theta", "kernel"}) {
    auto* sub = verify->add_subcommand(name);
    sub->add_option("--n", ns, "Half dimensions");
    if (std::string(name) == "relations") {
      sub->add_option("--k", ks, "Scale factors");
      sub->add_option("--r", r, "Truncation level")->check(CLI::Range(0, 12));
    }
    sub->callback([&suite_name, name] { suite_name = name; });
  }

  auto* normalize = app.add_subcommand("normalize", "Sternberg-normalize a jet");
  std::string jet_file;
  long k = 2;
  std::optional<int> r_opt;
  normalize->add_option("--jet", jet_file, "Jet JSON file")->required();
  normalize->add_option("--k", k, "Scale of I(k)");
  normalize->add_option("--r", r_opt, "Truncation level");

  auto* reconstruct = app.add_subcommand("reconstruct", "Rebuild a jet from its low levels");
  std::string low_file;
  long m = 2;
  int rr = 6;
  reconstruct->add_option("--low", low_file, "Jet JSON file with the low levels")->required();
  reconstruct->add_option("--k", k, "Scale of I(k)");
  reconstruct->add_option("--m", m, "Exponent of the relation")->required();
  reconstruct->add_option("--r", rr, "Target level");

  auto* word = app.add_subcommand("word", "Evaluate a word in AN");
  std::string lattice_file, word_text;
  word->add_option("--lattice", lattice_file, "Lattice JSON file")->required();
  word->add_option("--word", word_text, "Word, e.g. \"a b1 a^-1 b1^-2\"")->required();

  auto* certificate = app.add_subcommand("certificate", "Contraction certificate for the standard lattice");
  std::string lambda_text, eps_text;
  int cert_n = 1;
  certificate->add_option("--k", k, "Scale factor");
  certificate->add_option("--lambda", lambda_text, "lambda as p/q")->required();
  certificate->add_option("--eps", eps_text, "eps as p/q")->required();
  certificate->add_option("--n", cert_n, "Half dimension")->check(CLI::Range(1, 3));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    for (int n : ns)
      if (n < 1 || n > 3) throw MalformedInput("n must be in 1..3");
    for (long kk : ks)
      if (kk < 2) throw MalformedInput("k must be >= 2");

    if (*verify) {
      Suite s;
      if (suite_name == "relations") {
        if (ns.empty()) ns = {1, 2};
        if (ks.empty()) ks = {2, 3};
        s = suite_relations(ns, ks, r);
      } else if (suite_name == "brackets") {
        s = suite_brackets(ns.empty() ? std::vector<int>{1, 2, 3} : ns);
      } else if (suite_name == "centralizer") {
        s = suite_centralizer(ns.empty() ? std::vector<int>{1, 2} : ns);
      } else if (suite_name == "theta") {
        s = suite_theta(ns.empty() ? std::vector<int>{1, 2} : ns);
      } else {
        s = suite_kernel(ns.empty() ? std::vector<int>{1, 2} : ns);
      }
      bool ok = s.ok();
      return emit(s.report(), ok, timing, start);
    }

    if (*normalize) {
      // Either a bare jet or a request {"jet": ..., "k": K}; --k overrides.
      json request = read_json_file(jet_file);
      if (request.contains("jet")) {
        if (request.contains("k") && normalize->count("--k") == 0)
          k = load([&] { return request.at("k").get<long>(); });
        request = request.at("jet");
      }
      if (k < 2) throw MalformedInput("k must be >= 2");
      Jet f = load([&] { return jet_from_json(request); });
      if (r_opt) {
        if (*r_opt > f.r) throw MalformedInput("--r exceeds the level of the supplied jet");
        f = make_jet(f.n, *r_opt, f.comps);
      }
      json out = {{"k", k}};
      try {
        KillResult kill = kill_level_minus_one(f);
        json v = json::array();
        for (const auto& x : kill.v) v.push_back(x.str());
        out["level_minus_one_conjugator"] = v;
        NormalizationResult res = sternberg_normalize(kill.result);
        bool exact = compose(kill.result, res.h) == compose(res.h, res.g);
        json body = normalization_to_json(res);
        for (auto& [key, val] : body.items()) out[key] = val;
        out["linear_part_is_I(k)"] = res.g == scaling_jet(res.g.n, res.g.r, Rational(k));
        out["conjugacy_exact"] = exact;
        out["status"] = exact ? "pass" : "fail";
        return emit(out, exact, timing, start);
      } catch (const std::domain_error& e) {
        out["status"] = "fail";
        out["error"] = e.what();
        return emit(out, false, timing, start);
      }
    }

    if (*reconstruct) {
      Jet low = load([&] { return jet_from_json(read_json_file(low_file)); });
      if (k < 2 || m < 1) throw MalformedInput("need k >= 2 and m >= 1");
      json out = {{"k", k}, {"m", m}, {"r", rr}};
      try {
        Jet f = load([&]() -> Jet {
          if (rr < low.r) throw std::invalid_argument("--r below the supplied levels");
          return low;
        });
        f = reconstruct_from_low_order(f, k, m, rr);
        out["jet"] = jet_to_json(f);
        out["status"] = "pass";
        return emit(out, true, timing, start);
      } catch (const std::domain_error& e) {
        out["status"] = "fail";
        out["error"] = e.what();
        return emit(out, false, timing, start);
      } catch (const std::invalid_argument& e) {
        throw MalformedInput(e.what());
      }
    }

    if (*word) {
      LatticePresentation l = load([&] { return lattice_from_json(read_json_file(lattice_file)); });
      GroupWord w = load([&] { return parse_word(word_text); });
      for (const auto& letter : w)
        if (letter.gen == 'b' && (letter.index < 1 || letter.index > 2 * l.n))
          throw MalformedInput("generator index out of range");
      ANElement e = evaluate_word(w, l);
      json out = {{"word", word_to_json(w)}, {"element", an_to_json(e)}, {"identity", e == an_identity(l.n)}};
      return emit(out, true, timing, start);
    }

    if (*certificate) {
      Rational lambda = load([&] { return Rational::parse(lambda_text); });
      Rational eps = load([&] { return Rational::parse(eps_text); });
      if (k < 2) throw MalformedInput("k must be >= 2");
      ContractionCertificate c = load([&] {
        return contraction_certificate(k, lambda, eps, chart_affine_data(standard_lattice(cert_n, k)).u);
      });
      return emit(certificate_to_json(c), c.ok, timing, start);
    }
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
