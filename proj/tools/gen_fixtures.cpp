// Regenerates data/representatives.json: one generating tuple per quasicoxeter bucket.
#include "hurwitz/orbit.hpp"
#include "hurwitz/serialize.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <algorithm>

using namespace hw;

namespace {

// Listing order for the pinned buckets; anything else goes after, sorted.
const std::map<std::string, std::vector<std::string>> kOrder = {
    {"E6", {"Phi3*Phi12", "Phi9", "Phi3*Phi6^2"}},
    {"E7", {"Phi2*Phi14", "Phi2*Phi6*Phi12", "Phi2*Phi18", "Phi2*Phi6*Phi10", "Phi2*Phi6^3"}},
    {"E8", {"Phi30", "Phi24", "Phi20", "Phi6*Phi18", "Phi15", "Phi12^2", "Phi10^2", "Phi6^2*Phi12", "Phi6^4"}},
    {"H4",
     {"Q(1/15)*Q(11/15)", "Q(1/5)^2", "Q(7/15)*Q(13/15)", "Q(3/5)^2", "Q(3/10)*Q(7/10)", "Q(4/15)*Q(14/15)", "Q(1/10)*Q(9/10)",
      "Q(2/15)*Q(8/15)", "Phi12", "Phi10", "Phi6^2"}},
};

struct Entry {
  std::string bucket;
  std::vector<int> refls;
  std::string note;
};

void emit(json &out, const std::string &group, std::vector<Entry> entries) {
  auto rank = [&](const std::string &b) {
    auto it = kOrder.find(group);
    if (it == kOrder.end()) return 0L;
    auto pos = std::find(it->second.begin(), it->second.end(), b);
    return (long)(pos - it->second.begin());
  };
  std::stable_sort(entries.begin(), entries.end(), [&](const Entry &a, const Entry &b) {
    long ra = rank(a.bucket), rb = rank(b.bucket);
    return ra != rb ? ra < rb : a.bucket < b.bucket;
  });
  const RootSystem &r = root_system(group);
  for (auto &e : entries)
    out["fixtures"].push_back({{"group", group},
                               {"bucket", e.bucket},
                               {"reflections", e.refls},
                               {"matrix", matrix_to_json(r.arrangement(e.refls))},
                               {"note", e.note}});
  std::cerr << group << ": " << entries.size() << " bucket(s)\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Pin one generating tuple per quasicoxeter bucket"};
  std::string out_path = "data/representatives.json";
  long e7 = 2000, e8 = 10000;
  std::uint64_t seed = 1;
  int threads = 1;
  app.add_option("-o,--out", out_path, "output file");
  app.add_option("--e7-samples", e7);
  app.add_option("--e8-samples", e8);
  app.add_option("--seed", seed);
  app.add_option("--threads", threads)->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  json out{{"fixtures", json::array()}};
  for (std::string g : {"H3", "F4", "H4", "E6"}) {
    CountOptions o;
    o.exhaustive = g != "E6";
    o.seed = seed;
    o.threads = threads;
    OrbitCount c = count_generating_orbits(g, 0, o);
    std::vector<Entry> es;
    for (auto &orb : c.orbits)
      es.push_back({orb.charpoly.to_string(), orb.representative, std::string(o.exhaustive ? "exhaustive" : "seeded") + " orbit representative"});
    emit(out, g, es);
  }
  for (auto [g, n] : {std::pair{std::string("E7"), e7}, std::pair{std::string("E8"), e8}}) {
    BucketSearch s = search_buckets(g, n, seed, threads);
    std::vector<Entry> es;
    for (auto &b : s.buckets)
      es.push_back({b.fingerprint, b.first, "first of " + std::to_string(b.count) + " in " + std::to_string(s.samples) + " samples, seed " + std::to_string(seed)});
    emit(out, g, es);
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  f << out.dump(1) << "\n";
  return 0;
}
