#include "apll/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "apll/apll_core.hpp"
#include "apll/errors.hpp"
#include "apll/json_io.hpp"
#include "apll/lee_geometry.hpp"
#include "apll/search.hpp"
#include "apll/sieve.hpp"

namespace apll::cli {

namespace {

using json_io::Json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  while (true) {
    const std::size_t cut = text.find(sep);
    out.emplace_back(text.substr(0, cut));
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return out;
}

std::int64_t to_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

// Writes to the stream, or to `path` through a temporary file and rename.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

void require_format(const std::string& given, std::initializer_list<const char*> allowed) {
  if (given.empty()) return;
  for (const char* a : allowed) {
    if (given == a) return;
  }
  throw UsageError("--format " + given + " is not available for this subcommand");
}

GroupSpec group_or_cyclic(const std::string& literal, std::int64_t order) {
  if (!literal.empty()) return GroupSpec::parse(literal);
  return GroupSpec::cyclic(order);
}

std::int64_t code_order(int n) {
  const std::int64_t m = n;
  return 2 * (m * m + m + 1);
}

struct Options {
  std::string group, set, t0, t1, images, out, format, window;
  std::string hole_color, center_color, palette;
  int n = 0;
  int r = 2;
  int threads = 1;
  int cell_px = 16;
  std::int64_t from = 1, to = 1;
  std::uint64_t budget = 2'000'000'000ULL;
  bool use_prime = false;
  bool list = false;
  bool no_prune = false;
  bool no_battery = false;
  bool raw = false;
};

int cmd_sphere(const Options& o, std::ostream& out) {
  require_format(o.format, {"json"});
  if (o.n < 1 || o.r < 0) throw UsageError("sphere needs --n >= 1 and --r >= 0");
  Json j;
  j["n"] = o.n;
  j["r"] = o.r;
  j["size"] = sphere_size(o.n, o.r);
  if (o.list) {
    const LeeSphere s = enumerate_sphere(o.n, o.r);
    Json pts = Json::array();
    for (Eigen::Index i = 0; i < s.points.rows(); ++i) {
      Json p = Json::array();
      for (Eigen::Index c = 0; c < s.points.cols(); ++c) p.push_back(s.points(i, c));
      pts.push_back(p);
    }
    j["points"] = pts;
  }
  emit(j.dump(2) + "\n", o.out, out);
  return kOk;
}

CodeCandidate code_from(const Options& o) {
  if (o.n < 1) throw UsageError("--n >= 1 is required");
  if (o.set.empty()) throw UsageError("--set is required");
  const GroupSpec g = group_or_cyclic(o.group, code_order(o.n));
  return make_code_candidate(g, o.n, parse_element_list(g, o.set));
}

SplitCandidate split_from(const Options& o) {
  if (o.n < 1) throw UsageError("--n >= 1 is required");
  const std::int64_t m = o.n;
  const GroupSpec h = group_or_cyclic(o.group, m * m + m + 1);
  return make_split_candidate(h, o.n, parse_element_list(h, o.t0), parse_element_list(h, o.t1));
}

int cmd_verify(const Options& o, std::ostream& out) {
  require_format(o.format, {"json"});
  const CodeCandidate c = code_from(o);
  const Verdict v = verify_code(c);
  Json j;
  j["candidate"] = json_io::to_json(c);
  j["verdict"] = json_io::to_json(c.group, v);
  emit(j.dump(2) + "\n", o.out, out);
  return v.holds ? kOk : kNegative;
}

int cmd_split_verify(const Options& o, std::ostream& out) {
  require_format(o.format, {"json"});
  const SplitCandidate s = split_from(o);
  const SplitVerdict v = verify_split(s);
  Json j;
  j["split"] = json_io::to_json(s);
  j["verdict"] = json_io::to_json(s.subgroup, v);
  j["battery"] = json_io::to_json(necessary_battery(s));
  emit(j.dump(2) + "\n", o.out, out);
  return v.holds ? kOk : kNegative;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  require_format(o.format, {"json"});
  SplitCandidate s;
  if (!o.set.empty()) {
    s = split_code(code_from(o));
  } else {
    if (o.t0.empty()) throw UsageError("analyze needs --set, or --t0 and --t1");
    s = split_from(o);
  }
  const AnalysisReport r = analyze(s);
  Json j;
  j["split"] = json_io::to_json(s);
  j["report"] = json_io::to_json(s.subgroup, r);
  emit(j.dump(2) + "\n", o.out, out);
  return r.verified ? kOk : kNegative;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o.format, {"json"});
  if (o.n < 1) throw UsageError("--n >= 1 is required");
  if (o.threads < 1) throw UsageError("--threads must be >= 1");
  SearchConfig cfg;
  cfg.n = o.n;
  cfg.prune_partial = !o.no_prune;
  cfg.prune_battery = !o.no_battery;
  cfg.dedupe_orbits = !o.raw;
  cfg.max_candidates = o.budget;
  cfg.thread_partitions = o.threads;

  std::vector<SearchResult> results;
  if (o.group.empty()) {
    results = search_codes(cfg);
  } else {
    results.push_back(search_codes_in(GroupSpec::parse(o.group), cfg));
  }

  std::string text;
  bool any = false;
  bool complete = true;
  for (const auto& r : results) {
    for (const auto& s : r.solutions) {
      Json line;
      line["kind"] = "solution";
      Json c = json_io::to_json(s);
      for (auto it = c.begin(); it != c.end(); ++it) line[it.key()] = it.value();
      line["orbit_representative"] =
          std::find_if(r.orbit_representatives.begin(), r.orbit_representatives.end(), [&](const CodeCandidate& x) {
            return x.elements == s.elements;
          }) != r.orbit_representatives.end();
      text += line.dump() + "\n";
    }
    Json summary;
    summary["kind"] = "summary";
    Json body = json_io::summary_json(o.n, r);
    for (auto it = body.begin(); it != body.end(); ++it) summary[it.key()] = it.value();
    text += summary.dump() + "\n";
    for (const auto& w : r.warnings) err << "warning: " << w << "\n";
    any = any || !r.solutions.empty();
    complete = complete && r.complete;
  }
  emit(text, o.out, out);
  if (!complete) return kLimit;
  return any ? kOk : kNegative;
}

int cmd_sieve(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o.format, {"csv"});
  if (o.threads < 1) throw UsageError("--threads must be >= 1");
  SieveTable t;
  try {
    t = classify_range(o.from, o.to, o.use_prime, o.threads);
  } catch (const std::out_of_range& e) {
    if (o.to > kSieveRangeMax) throw limit_exceeded(e.what());
    throw UsageError(e.what());
  }
  emit(to_csv(t), o.out, out);
  const std::string hist = json_io::histogram_json(t).dump(2) + "\n";
  if (o.out.empty()) {
    err << hist;
  } else {
    emit(hist, o.out + ".histogram.json", out);
  }
  return kOk;
}

LeeLattice lattice_from(const Options& o) {
  if (o.group.empty()) throw UsageError("--group is required");
  if (o.images.empty()) throw UsageError("--images is required");
  const GroupSpec g = GroupSpec::parse(o.group);
  const auto images = parse_element_list(g, o.images);
  return lattice_from_code(g, images);
}

int cmd_lattice(const Options& o, std::ostream& out) {
  require_format(o.format, {"json"});
  if (o.r < 0) throw UsageError("--r must be >= 0");
  const LeeLattice l = lattice_from(o);
  const GroupSpec g = GroupSpec::parse(o.group);
  Json j;
  j["lattice"] = json_io::to_json(l);
  j["surjective"] = l.det_abs() == g.order();
  j["metrics"] = json_io::to_json(code_metrics(l, o.r));
  emit(j.dump(2) + "\n", o.out, out);
  return kOk;
}

int cmd_tile(const Options& o, std::ostream& out) {
  require_format(o.format, {"svg"});
  if (o.r < 0) throw UsageError("--r must be >= 0");
  const LeeLattice l = lattice_from(o);
  if (l.dimension() != 2) throw UsageError("tile needs exactly two images");
  TileWindow w{-10, -10, 20, 20};
  if (!o.window.empty()) {
    const auto parts = split(o.window, ',');
    if (parts.size() != 4) throw UsageError("--window expects x0,y0,width,height");
    w = TileWindow{to_int(parts[0]), to_int(parts[1]), to_int(parts[2]), to_int(parts[3])};
    if (w.width < 0 || w.height < 0) throw UsageError("--window width and height must be >= 0");
  }
  TileStyle style;
  if (o.cell_px < 1) throw UsageError("--cell-px must be >= 1");
  style.cell_px = o.cell_px;
  if (!o.hole_color.empty()) style.hole_color = o.hole_color;
  if (!o.center_color.empty()) style.center_color = o.center_color;
  if (!o.palette.empty()) style.palette = split(o.palette, ',');
  emit(render_tiling(l, o.r, w, style), o.out, out);
  return kOk;
}

}  // namespace

std::vector<GroupElement> parse_element_list(const GroupSpec& g, std::string_view text) {
  std::vector<GroupElement> out;
  if (text.empty()) return out;
  if (text.find(';') != std::string_view::npos) {
    for (const auto& part : split(text, ';')) out.push_back(g.parse_element(part));
    return out;
  }
  const auto parts = split(text, ',');
  const std::size_t rank = std::max<std::size_t>(1, g.rank());
  if (parts.size() % rank != 0) {
    throw UsageError("element list has " + std::to_string(parts.size()) + " integers, not a multiple of the rank " +
                     std::to_string(rank));
  }
  for (std::size_t i = 0; i < parts.size(); i += rank) {
    std::string chunk = parts[i];
    for (std::size_t k = 1; k < rank; ++k) chunk += "," + parts[i + k];
    out.push_back(g.parse_element(chunk));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost perfect linear Lee codes of packing radius 2"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Options o;

  auto add_out = [&](CLI::App* sc) {
    sc->add_option("--out", o.out, "write the primary output to this file");
    sc->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  };

  auto* sphere = app.add_subcommand("sphere", "Lee sphere size and points");
  sphere->add_option("--n", o.n, "dimension")->required();
  sphere->add_option("--r", o.r, "radius");
  sphere->add_flag("--list", o.list, "also list the points");
  add_out(sphere);

  auto* verify = app.add_subcommand("verify", "check the group-ring identity for T in G");
  verify->add_option("--group", o.group, "group, e.g. C14 (default: cyclic of order 2(n^2+n+1))");
  verify->add_option("--n", o.n, "dimension")->required();
  verify->add_option("--set", o.set, "elements of T")->required();
  add_out(verify);

  auto* split_verify = app.add_subcommand("split-verify", "check the two identities for (T0, T1) in H");
  split_verify->add_option("--group", o.group, "subgroup H (default: cyclic of order n^2+n+1)");
  split_verify->add_option("--n", o.n, "dimension")->required();
  split_verify->add_option("--t0", o.t0, "elements of T0")->required();
  split_verify->add_option("--t1", o.t1, "elements of T1")->required();
  add_out(split_verify);

  auto* analyze_cmd = app.add_subcommand("analyze", "multiplicity partitions, thetas and pair counts");
  analyze_cmd->add_option("--group", o.group, "G when --set is used, H when --t0/--t1 are used");
  analyze_cmd->add_option("--n", o.n, "dimension")->required();
  analyze_cmd->add_option("--set", o.set, "elements of T in G");
  analyze_cmd->add_option("--t0", o.t0, "elements of T0 in H");
  analyze_cmd->add_option("--t1", o.t1, "elements of T1 in H");
  add_out(analyze_cmd);

  auto* search = app.add_subcommand("search", "exhaustive search over groups of order 2(n^2+n+1)");
  search->add_option("--n", o.n, "dimension")->required();
  search->add_option("--group", o.group, "restrict to one group");
  search->add_option("--threads", o.threads, "worker threads");
  search->add_option("--budget", o.budget, "node budget per first-pair task");
  search->add_flag("--no-prune", o.no_prune, "disable partial-coefficient pruning");
  search->add_flag("--no-battery", o.no_battery, "skip the necessary-condition battery");
  search->add_flag("--raw", o.raw, "skip orbit deduplication");
  add_out(search);

  auto* sieve = app.add_subcommand("sieve", "classify dimensions n");
  sieve->add_option("--from", o.from, "first n")->required();
  sieve->add_option("--to", o.to, "last n")->required();
  sieve->add_flag("--use-prime-result", o.use_prime, "apply the primality result for 3 < n <= 10^5");
  sieve->add_option("--threads", o.threads, "worker threads");
  add_out(sieve);

  auto* lattice = app.add_subcommand("lattice", "lattice of a code: HNF basis and metrics");
  lattice->add_option("--group", o.group, "group G")->required();
  lattice->add_option("--images", o.images, "images of the unit vectors")->required();
  lattice->add_option("--r", o.r, "intended packing radius");
  add_out(lattice);

  auto* tile = app.add_subcommand("tile", "SVG picture of the induced tiling of Z^2");
  tile->add_option("--group", o.group, "group G")->required();
  tile->add_option("--images", o.images, "images of e1, e2")->required();
  tile->add_option("--r", o.r, "sphere radius");
  tile->add_option("--window", o.window, "x0,y0,width,height (default -10,-10,20,20)");
  tile->add_option("--cell-px", o.cell_px, "cell size in pixels");
  tile->add_option("--hole-color", o.hole_color, "fill for uncovered cells");
  tile->add_option("--center-color", o.center_color, "fill for codeword markers");
  tile->add_option("--palette", o.palette, "comma-separated fills for codeword cells");
  add_out(tile);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (sphere->parsed()) return cmd_sphere(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (split_verify->parsed()) return cmd_split_verify(o, out);
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (search->parsed()) return cmd_search(o, out, err);
    if (sieve->parsed()) return cmd_sieve(o, out, err);
    if (lattice->parsed()) return cmd_lattice(o, out);
    if (tile->parsed()) return cmd_tile(o, out);
  } catch (const limit_exceeded& e) {
    err << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return kLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace apll::cli
