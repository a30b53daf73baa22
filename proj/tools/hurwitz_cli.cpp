#include "hurwitz/catalog.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/quasicox.hpp"
#include "hurwitz/realization.hpp"
#include "hurwitz/serialize.hpp"
#include "hurwitz/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hw;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  long cap = 1000000;
  int threads = 1;
  bool long_run = false;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App *c, Common &o) {
  c->add_option("--cap", o.cap, "state cap for orbit enumeration")->check(CLI::PositiveNumber);
  c->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  c->add_flag("--long", o.long_run, "run the long workloads");
  c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  c->add_option("--out", o.out, "write the report to this file");
}

json load_json(const std::string &path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error &e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const Common &o, const json &j, const std::string &text) {
  std::string s = o.format == "json" ? j.dump(2) + "\n" : text;
  if (o.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  f << s;
}

void emit_text(Common o, const std::string &text) {
  o.format = "text";
  emit(o, nullptr, text);
}

std::string fingerprint_text(const Fingerprint &f) { return f.to_string() + "\n"; }

std::string matrix_text(const ArrangementMatrix &b) {
  std::ostringstream s;
  for (std::size_t i = 0; i < b.n(); ++i) {
    for (std::size_t j = 0; j < b.n(); ++j) s << (j ? "  " : "") << format_expr(b(i, j));
    s << "\n";
  }
  return s.str();
}

std::vector<int> zero_based(const std::vector<int> &v) {
  std::vector<int> out;
  for (int x : v) {
    if (x < 1) throw InputError("indices are 1-based");
    out.push_back(x - 1);
  }
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Braid group action on reflection arrangements"};
  app.require_subcommand(1);
  Common o;

  std::string file, word;
  auto *orbit = app.add_subcommand("orbit", "orbit of an arrangement matrix");
  orbit->add_option("file", file, "matrix file")->required();
  orbit->add_option("--word", word, "apply a braid word such as \"s1 s2^-1\" and print the image instead");
  add_common(orbit, o);

  auto *hurw = app.add_subcommand("hurwitz", "Hurwitz orbit of a reflection tuple");
  hurw->add_option("file", file, "tuple file {\"group\":..., \"reflections\":[root-index, ...]}")->required();
  add_common(hurw, o);

  auto *classify = app.add_subcommand("classify", "finiteness verdict for a 3x3 matrix");
  classify->add_option("file", file, "matrix file")->required();
  add_common(classify, o);

  auto *cp = app.add_subcommand("charpoly", "quasicoxeter fingerprint of a matrix or tuple");
  cp->add_option("file", file, "matrix or tuple file")->required();
  add_common(cp, o);

  std::string name, family;
  int n = 0, k = 0, p = 0, q = 0;
  bool roots = false, dot = false;
  auto *cat = app.add_subcommand("catalog", "named matrices and root systems");
  cat->add_option("name", name, "A3, B4, D5, E6:2, H4:11, ...");
  cat->add_option("--extension", family, "AK, A1, E1, E2, B1, B2, B3, Dext1..Dext6");
  cat->add_option("--n", n);
  cat->add_option("--k", k);
  cat->add_option("--p", p);
  cat->add_option("--q", q);
  cat->add_flag("--roots", roots, "summarize the root system instead");
  cat->add_flag("--dot", dot, "emit the labelled graph in DOT");
  add_common(cat, o);

  std::string spec;
  bool unique = false;
  auto *real = app.add_subcommand("realize", "reflections realizing a matrix");
  real->add_option("file", file, "matrix file")->required();
  real->add_option("--spec", spec, "general realization: {\"I\",\"Ip\",\"J\",\"Jp\" (1-based), \"a\", \"b\"}");
  real->add_flag("--unique", unique, "realization in the span of the v_i (invertible matrices)");
  add_common(real, o);

  std::string suite;
  std::uint64_t seed = 1;
  auto *verify = app.add_subcommand("verify", "run an acceptance suite");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--n", n, "dn-orbits: the rank");
  verify->add_option("--seed", seed);
  add_common(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    OrbitOptions oo;
    oo.cap = o.cap;
    oo.threads = o.threads;

    if (*orbit) {
      ArrangementMatrix b = matrix_from_json(load_json(file));
      if (!word.empty()) {
        ArrangementMatrix a = act_word(b, BraidWord::parse(word));
        emit(o, matrix_to_json(a), matrix_text(a));
        return 0;
      }
      OrbitReport r = matrix_orbit(b, oo);
      emit(o, orbit_report_to_json(r),
           std::string(r.finite ? "finite" : "exceeded cap") + ", " + std::to_string(r.size) + " matrices, det " +
               format_expr(r.invariants.det) + ", " + r.invariants.charpoly.to_string() + "\n");
    } else if (*hurw) {
      TupleInput t = tuple_from_json(load_json(file));
      OrbitReport r = hurwitz_orbit(root_system(t.group), t.reflections, oo);
      emit(o, orbit_report_to_json(r),
           std::string(r.finite ? "finite" : "exceeded cap") + ", " + std::to_string(r.size) + " tuples, " +
               r.invariants.charpoly.to_string() + "\n");
    } else if (*classify) {
      Classification c = classify_3x3(matrix_from_json(load_json(file)), oo);
      emit(o, classification_to_json(c), to_string(c.verdict) + ": " + c.reason + "\n");
    } else if (*cp) {
      json j = load_json(file);
      Fingerprint f;
      if (j.contains("group")) {
        TupleInput t = tuple_from_json(j);
        f = tuple_invariants(root_system(t.group), t.reflections).charpoly;
      } else {
        ArrangementMatrix b = matrix_from_json(j);
        if (!det(b.mat()).is_zero()) f = fingerprint_of(cox_matrix(b));
        else f = fingerprint_of(quasicox_degenerate(b, minimal_realization(b)));
      }
      emit(o, fingerprint_to_json(f), fingerprint_text(f));
    } else if (*cat) {
      if (!family.empty()) {
        ArrangementMatrix b = extension_matrix({family, n, k, p, q});
        if (dot) emit_text(o, to_dot(to_graph(b), family));
        else emit(o, matrix_to_json(b), matrix_text(b));
      } else if (name.empty()) {
        throw InputError("catalog needs a name or --extension");
      } else if (roots) {
        const RootSystem &r = root_system(name);
        const ReflectionTables &t = reflection_tables(name);
        std::vector<int> simple_roots;
        for (int s : r.simple) simple_roots.push_back(r.positive[s]);
        json j{{"label", r.label}, {"rank", r.rank}, {"roots", r.num_roots()}, {"reflections", r.num_reflections()},
               {"reflection_classes", t.class_size}, {"simple_reflections", r.simple}, {"simple_roots", simple_roots}};
        emit(o, j, j.dump() + "\n");
      } else {
        ArrangementMatrix b = universal_matrix(name);
        if (dot) emit_text(o, to_dot(to_graph(b), name));
        else emit(o, matrix_to_json(b), matrix_text(b));
      }
    } else if (*real) {
      ArrangementMatrix b = matrix_from_json(load_json(file));
      Realization r;
      if (!spec.empty()) {
        json s = load_json(spec);
        RealizationSpec rs;
        rs.I = zero_based(s.at("I").get<std::vector<int>>());
        rs.Ip = zero_based(s.value("Ip", std::vector<int>{}));
        rs.J = zero_based(s.at("J").get<std::vector<int>>());
        rs.Jp = zero_based(s.value("Jp", std::vector<int>{}));
        for (auto &x : s.value("a", json::array())) rs.a.push_back(x.is_string() ? parse_expr(x.get<std::string>()) : ExactNumber(x.get<long>()));
        for (auto &x : s.value("b", json::array())) rs.b.push_back(x.is_string() ? parse_expr(x.get<std::string>()) : ExactNumber(x.get<long>()));
        r = general_realization(b, rs);
      } else {
        r = unique ? unique_realization(b) : minimal_realization(b);
      }
      std::ostringstream t;
      for (std::size_t i = 0; i < r.size(); ++i) t << "r_" << i + 1 << " =\n" << r.reflection(i).to_string() << "\n";
      emit(o, realization_to_json(r), t.str());
    } else if (*verify) {
      SuiteOptions so;
      so.threads = o.threads;
      so.long_run = o.long_run;
      so.n = n;
      so.seed = seed;
      SuiteResult r = run_suite(suite, so);
      emit(o, suite_to_json(r), suite_to_text(r));
      return r.pass ? 0 : 1;
    }
  } catch (const InputError &e) {
    std::cerr << json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const json::exception &e) {
    std::cerr << json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const ParseError &e) {
    std::cerr << json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << json{{"error", "runtime"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
  return 0;
}
