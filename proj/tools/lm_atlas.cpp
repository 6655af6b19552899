// lm-atlas: root-system / affine Weyl group / wonderful-compactification
// combinatorics CLI. Exit codes: 0 pass, 1 verification fail, 2 invalid
// input, 3 resource budget exceeded, 4 inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lma/admissible.hpp"
#include "lma/affine.hpp"
#include "lma/cache.hpp"
#include "lma/poset.hpp"
#include "lma/wonderful.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;
constexpr int kExitInconclusive = 4;

int status_code(const std::string& status) {
  if (status == "pass") return kExitPass;
  if (status == "inconclusive") return kExitInconclusive;
  return kExitFail;
}

// Severity merge for multi-report commands: pass < inconclusive < fail <
// resource < invalid.
int worst_code(int a, int b) {
  auto sev = [](int c) {
    switch (c) {
      case kExitPass: return 0;
      case kExitInconclusive: return 1;
      case kExitFail: return 2;
      case kExitResource: return 3;
      default: return 4;
    }
  };
  return sev(a) >= sev(b) ? a : b;
}

lma::Coweight parse_mu(const lma::RootDatum& rd, const std::string& s) {
  if (s.rfind("minuscule:", 0) == 0) {
    int i = 0;
    try {
      i = std::stoi(s.substr(10));
    } catch (const std::exception&) {
      throw lma::InputError("bad --mu '" + s + "'");
    }
    if (i < 1 || i > rd.rank())
      throw lma::InputError("--mu minuscule:i index out of range");
    auto w = rd.fundamental_coweight(i - 1);
    if (!w || !rd.is_minuscule(*w))
      throw lma::InputError("omega_" + std::to_string(i) +
                            "^vee is not a minuscule coweight of this lattice");
    return *w;
  }
  std::vector<int> coords;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      coords.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw lma::InputError("bad --mu '" + s + "'");
    }
  }
  if (static_cast<int>(coords.size()) != rd.rank())
    throw lma::InputError("--mu needs " + std::to_string(rd.rank()) + " coordinates");
  return lma::Coweight{std::move(coords)};
}

// "1,3" -> {0,2}; "" and "none" -> {}.
std::vector<int> parse_subset(const std::string& s, int rank) {
  std::vector<int> out;
  if (s.empty() || s == "none") return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    int i = 0;
    try {
      i = std::stoi(tok);
    } catch (const std::exception&) {
      throw lma::InputError("bad simple-index list '" + s + "'");
    }
    if (i < 1 || i > rank) throw lma::InputError("simple index out of range: " + tok);
    out.push_back(i - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

lma::Instance make_instance(const std::string& type_s, const std::string& lattice_s,
                            std::uint64_t budget) {
  return lma::Instance::make(lma::CartanType::parse(type_s),
                             lma::parse_lattice(lattice_s), budget);
}

// Window covering W_0 t_mu W_0 (and hence Adm(mu)), restricted to mu's Omega
// class, via the on-disk cache.
lma::BoundedWindow coset_window(const lma::Instance& inst, const lma::Coweight& mu,
                                std::uint64_t budget) {
  long long bound = inst.datum->two_rho_pairing(mu) +
                    static_cast<long long>(inst.datum->positive_roots().size());
  lma::OmegaClass cls = inst.affine->omega_component(inst.affine->translation(mu));
  return lma::cached_window(*inst.affine, bound, budget, &cls);
}

std::string coords_str(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

int cmd_roots(const std::string& type_s, const std::string& lattice_s,
              const std::string& format) {
  lma::RootDatum rd = lma::RootDatum::build(lma::CartanType::parse(type_s),
                                            lma::parse_lattice(lattice_s));
  if (format == "json") {
    std::cout << rd.to_json().dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "type " << rd.type().to_string() << " (" << lma::lattice_name(rd.lattice())
            << ")\n";
  std::cout << "positive roots (" << rd.positive_roots().size() << "):\n";
  for (const auto& beta : rd.positive_roots()) std::cout << "  " << coords_str(beta) << "\n";
  std::cout << "highest root: " << coords_str(rd.highest_root()) << "\n";
  auto minuscule = rd.list_minuscule();
  if (minuscule.empty()) {
    std::cout << "minuscule: none\n";
  } else {
    std::cout << "minuscule:";
    for (const auto& m : minuscule) std::cout << " " << coords_str(m.coords);
    std::cout << "\n";
  }
  std::cout << "fundamental group order: " << rd.fundamental_group_order() << "\n";
  return kExitPass;
}

int cmd_adm(const std::string& type_s, const std::string& lattice_s,
            const std::string& mu_s, const std::string& parahoric_s, bool has_parahoric,
            const std::string& format, std::uint64_t budget) {
  lma::Instance inst = make_instance(type_s, lattice_s, budget);
  lma::Coweight mu = parse_mu(*inst.datum, mu_s);
  if (!inst.datum->is_dominant(mu)) throw lma::InputError("--mu must be dominant");

  long long bound = inst.datum->two_rho_pairing(mu) + 2;
  lma::OmegaClass cls = inst.affine->omega_component(inst.affine->translation(mu));
  lma::BoundedWindow window = lma::cached_window(*inst.affine, bound, budget, &cls);
  lma::AdmissibleSet adm = lma::compute_adm(*inst.affine, window, mu);

  std::optional<lma::ParahoricProjection> proj;
  if (has_parahoric)
    proj = lma::parahoric_project(*inst.affine, adm,
                                  parse_subset(parahoric_s, inst.datum->rank()));

  if (format == "json") {
    std::cout << lma::adm_report(*inst.affine, adm, proj ? &*proj : nullptr).dump(2)
              << "\n";
    return kExitPass;
  }
  if (format == "dot") {
    std::cout << lma::adm_dot(*inst.affine, adm);
    return kExitPass;
  }
  std::cout << "Adm(" << coords_str(mu.coords) << ") in " << type_s << ": size "
            << adm.elements.size() << "\n";
  std::cout << "maxima (" << adm.maxima.size() << "):";
  for (std::size_t i : adm.maxima)
    std::cout << " " << inst.affine->to_string(window.element(i));
  std::cout << "\n";
  std::map<long long, std::size_t> hist;
  for (std::size_t i : adm.elements) ++hist[window.length(i)];
  std::cout << "lengths:";
  for (const auto& [len, cnt] : hist) std::cout << " " << len << ":" << cnt;
  std::cout << "\n";
  if (proj) {
    std::cout << "parahoric Y=" << lma::subset_to_string(proj->Y) << ": "
              << proj->classes.size() << " classes, " << proj->maxima_count
              << " maximal\n";
    for (const auto& c : proj->classes)
      std::cout << "  rep " << inst.affine->to_string(window.element(c.representative))
                << " size " << c.members.size() << (c.maximal ? " (maximal)" : "")
                << "\n";
  }
  return kExitPass;
}

int cmd_orbit_poset(const std::string& type_s, const std::string& lattice_s,
                    const std::string& J_s, const std::string& format,
                    std::uint64_t budget) {
  lma::Instance inst = make_instance(type_s, lattice_s, budget);
  std::vector<int> J = parse_subset(J_s, inst.datum->rank());
  lma::SlicePlan plan(*inst.group, J);

  std::vector<std::size_t> all(plan.num_pairs());
  for (std::size_t p = 0; p < all.size(); ++p) all[p] = p;
  auto covers = lma::slice_covers(plan, all);

  if (format == "dot") {
    std::vector<std::string> labels(plan.num_pairs());
    for (std::size_t p = 0; p < labels.size(); ++p) {
      auto [x, y] = plan.pair_at(p);
      labels[p] = inst.group->to_string(x) + " | " + inst.group->to_string(y);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    edges.reserve(covers.size());
    for (const auto& [q, p] : covers) edges.emplace_back(q, p);
    std::cout << lma::dot_export("orbit_poset_J" + lma::subset_to_string(J), labels,
                                 edges);
    return kExitPass;
  }
  if (format == "json") {
    ordered_json j;
    j["type"] = inst.datum->type().to_string();
    j["J"] = ordered_json::array();
    for (int i : J) j["J"].push_back(i + 1);
    j["pairs"] = plan.num_pairs();
    j["W_min_reps"] = plan.xs().size();
    j["covers"] = ordered_json::array();
    for (const auto& [q, p] : covers) {
      auto [qx, qy] = plan.pair_at(q);
      auto [px, py] = plan.pair_at(p);
      j["covers"].push_back({{"lower", {inst.group->to_string(qx), inst.group->to_string(qy)}},
                             {"upper", {inst.group->to_string(px), inst.group->to_string(py)}}});
    }
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "orbit poset " << type_s << " J=" << lma::subset_to_string(J) << ": "
            << plan.num_pairs() << " labels (" << plan.xs().size() << " x "
            << inst.group->size() << "), " << covers.size() << " cover relations\n";
  return kExitPass;
}

ordered_json fiber_partition_report(const lma::Instance& inst,
                                    const std::optional<lma::Coweight>& mu_opt) {
  const lma::RootDatum& rd = *inst.datum;
  std::vector<lma::Coweight> lambdas;
  if (mu_opt)
    lambdas.push_back(*mu_opt);
  else
    lambdas = rd.dominant_coweights_up_to(10);

  long long lw = static_cast<long long>(rd.positive_roots().size());
  ordered_json counterexample = nullptr;
  ordered_json partitions = ordered_json::array();
  for (const auto& lam : lambdas) {
    lma::AffineRootPartition p = inst.affine->affine_root_partition(lam);
    long long tworho = rd.two_rho_pairing(lam);
    bool ok = p.levi_count + p.negative_count + p.positive_count ==
                  2 * rd.positive_roots().size() &&
              p.negative_count == p.positive_count && p.fiber_dimension == tworho;
    if (!ok && counterexample.is_null())
      counterexample = {{"lambda", lam.coords}};
    ordered_json e;
    e["lambda"] = lam.coords;
    e["levi"] = p.levi_count;
    e["negative"] = p.negative_count;
    e["positive"] = p.positive_count;
    e["coset_count"] = p.fiber_dimension;
    e["paper_expression"] = p.paper_expression;  // <lambda,2rho> - l(w_S), reported only
    ordered_json lt = ordered_json::array();
    for (int i : p.levi_type) lt.push_back(i + 1);
    e["levi_type"] = std::move(lt);
    partitions.push_back(std::move(e));
  }
  ordered_json j;
  j["check"] = "fiber_partition";
  ordered_json instj;
  instj["type"] = rd.type().to_string();
  instj["lattice"] = lma::lattice_name(rd.lattice());
  if (mu_opt)
    instj["mu"] = mu_opt->coords;
  else
    instj["mu"] = nullptr;
  instj["J"] = nullptr;
  instj["Y"] = nullptr;
  j["instance"] = std::move(instj);
  j["status"] = counterexample.is_null() ? "pass" : "fail";
  j["counterexample"] = std::move(counterexample);
  j["coverage"] = nullptr;
  ordered_json sizes;
  sizes["lambdas"] = lambdas.size();
  sizes["roots"] = 2 * rd.positive_roots().size();
  sizes["l_w_S"] = lw;
  j["sizes"] = std::move(sizes);
  if (mu_opt) j["partitions"] = std::move(partitions);
  return j;
}

int emit_reports(const std::vector<ordered_json>& reports) {
  int code = kExitPass;
  if (reports.size() == 1) {
    std::cout << reports.front().dump(2) << "\n";
    code = status_code(reports.front()["status"].get<std::string>());
  } else {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
      code = worst_code(code, status_code(r["status"].get<std::string>()));
      arr.push_back(r);
    }
    std::cout << arr.dump(2) << "\n";
  }
  return code;
}

int cmd_verify(const std::string& check, const std::string& type_s,
               const std::string& lattice_s, const std::string& mu_s,
               const std::string& J_s, bool has_J, const std::string& Y_s, bool has_Y,
               std::uint64_t budget) {
  lma::Instance inst = make_instance(type_s, lattice_s, budget);
  int rank = inst.datum->rank();
  std::vector<ordered_json> reports;

  if (check == "helam-iso" || check == "adm-bijection") {
    if (mu_s.empty()) throw lma::InputError("verify " + check + " requires --mu");
    lma::Coweight mu = parse_mu(*inst.datum, mu_s);
    lma::BoundedWindow window = coset_window(inst, mu, budget);
    reports.push_back(check == "helam-iso"
                          ? lma::verify_helam_poset_iso(*inst.affine, window, mu)
                          : lma::verify_adm_bijection(*inst.affine, window, mu));
  } else if (check == "slice-formulas") {
    std::vector<std::vector<int>> Js =
        has_J ? std::vector<std::vector<int>>{parse_subset(J_s, rank)}
              : lma::all_subsets(rank);
    std::vector<std::vector<int>> Ys =
        has_Y ? std::vector<std::vector<int>>{parse_subset(Y_s, rank)}
              : lma::all_subsets(rank);
    for (const auto& J : Js)
      for (const auto& Y : Ys)
        reports.push_back(lma::verify_slice_formulas(*inst.group, J, Y));
  } else if (check == "corollary-coverage") {
    if (!has_J) throw lma::InputError("verify corollary-coverage requires --J");
    std::vector<int> J = parse_subset(J_s, rank);
    std::vector<std::vector<int>> Ys =
        has_Y ? std::vector<std::vector<int>>{parse_subset(Y_s, rank)}
              : lma::all_subsets(rank);
    for (const auto& Y : Ys)
      reports.push_back(lma::corollary_coverage_report(*inst.group, J, Y));
  } else if (check == "fiber-partition") {
    std::optional<lma::Coweight> mu;
    if (!mu_s.empty()) mu = parse_mu(*inst.datum, mu_s);
    reports.push_back(fiber_partition_report(inst, mu));
  } else {
    throw lma::InputError("unknown check '" + check + "'");
  }
  return emit_reports(reports);
}

int cmd_table(const std::string& path, const std::string& format, std::uint64_t budget) {
  std::ifstream in(path);
  if (!in) throw lma::InputError("cannot open manifest '" + path + "'");
  ordered_json manifest;
  try {
    in >> manifest;
  } catch (const std::exception& e) {
    throw lma::InputError(std::string("manifest parse error: ") + e.what());
  }
  if (manifest.is_object() && manifest.contains("instances"))
    manifest = manifest["instances"];
  if (!manifest.is_array()) throw lma::InputError("manifest must be a JSON array");

  struct Row {
    std::string type, mu, error;
    std::size_t w0 = 0, wj = 0, adm = 0, components = 0;
    long long tworho = 0;
    std::vector<std::pair<std::string, std::string>> checks;  // name -> status
  };
  std::vector<Row> rows;
  int code = kExitPass;

  for (const auto& item : manifest) {
    Row row;
    try {
      row.type = item.at("type").get<std::string>();
      std::string lattice_s = item.value("lattice", std::string("adjoint"));
      lma::Instance inst = make_instance(row.type, lattice_s, budget);
      lma::Coweight mu = item.at("mu").is_string()
                             ? parse_mu(*inst.datum, item.at("mu").get<std::string>())
                             : lma::Coweight{item.at("mu").get<std::vector<int>>()};
      row.mu = coords_str(mu.coords);
      row.w0 = inst.group->size();
      row.wj = inst.group->minimal_reps(inst.datum->type_map(mu)).size();
      row.tworho = inst.datum->two_rho_pairing(mu);

      lma::BoundedWindow window = coset_window(inst, mu, budget);
      lma::AdmissibleSet adm = lma::compute_adm(*inst.affine, window, mu);
      row.adm = adm.elements.size();
      row.components = adm.maxima.size();

      for (const auto& name : item.value("checks", std::vector<std::string>{})) {
        ordered_json rep;
        if (name == "helam-iso")
          rep = lma::verify_helam_poset_iso(*inst.affine, window, mu);
        else if (name == "adm-bijection")
          rep = lma::verify_adm_bijection(*inst.affine, window, mu);
        else if (name == "fiber-partition")
          rep = fiber_partition_report(inst, mu);
        else
          throw lma::InputError("manifest check '" + name + "' not supported in table");
        std::string status = rep["status"].get<std::string>();
        row.checks.emplace_back(name, status);
        code = worst_code(code, status_code(status));
      }
    } catch (const lma::ResourceError& e) {
      row.error = e.what();
      code = worst_code(code, kExitResource);
    } catch (const std::exception& e) {
      row.error = e.what();
      code = worst_code(code, kExitInvalid);
    }
    rows.push_back(std::move(row));
  }

  const char* sep = format == "tsv" ? "\t" : " | ";
  std::ostringstream out;
  out << "type" << sep << "mu" << sep << "|W0|" << sep << "|W^I(mu)|" << sep
      << "<mu,2rho>" << sep << "|Adm|" << sep << "components" << sep << "checks\n";
  if (format != "tsv") out << "---|---|---|---|---|---|---|---\n";
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      out << r.type << sep << r.mu << sep << "error: " << r.error << "\n";
      continue;
    }
    out << r.type << sep << r.mu << sep << r.w0 << sep << r.wj << sep << r.tworho << sep
        << r.adm << sep << r.components << sep;
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
      if (i) out << ",";
      out << r.checks[i].first << "=" << r.checks[i].second;
    }
    out << "\n";
  }
  std::cout << out.str();
  return code;
}

int cmd_cache(const std::string& action) {
  if (action == "stat") {
    lma::CacheStat s = lma::cache_stat();
    std::cout << "dir: " << s.dir.string() << "\n"
              << "entries: " << s.entries << "\n"
              << "bytes: " << s.bytes << "\n";
    return kExitPass;
  }
  if (action == "clear") {
    std::cout << "removed: " << lma::cache_clear() << "\n";
    return kExitPass;
  }
  throw lma::InputError("cache action must be 'stat' or 'clear'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lm-atlas: affine Weyl group / admissible set / wonderful "
               "compactification combinatorics"};
  app.require_subcommand(1);

  int jobs = 0;
  std::uint64_t budget = 5'000'000;
  app.add_option("--jobs", jobs, "worker threads (0 = hardware default)");
  app.add_option("--budget", budget, "element budget for groups and windows");

  std::string type_s, lattice_s = "adjoint", format = "text";
  std::string mu_s, J_s, Y_s, check_s, path_s, cache_action;
  bool has_parahoric = false;
  std::string parahoric_s;

  auto* roots = app.add_subcommand("roots", "print root-datum summary");
  roots->add_option("type", type_s, "Cartan type, e.g. A2")->required();
  roots->add_option("--lattice", lattice_s, "adjoint | simply_connected");
  roots->add_option("--format", format, "text | json");

  auto* adm = app.add_subcommand("adm", "compute Adm(mu)");
  adm->add_option("type", type_s)->required();
  adm->add_option("--lattice", lattice_s);
  adm->add_option("--mu", mu_s, "coweight coords 'a,b,...' or 'minuscule:i'")->required();
  auto* par = adm->add_option("--parahoric,-Y", parahoric_s, "parahoric level Y, e.g. 1,2");
  adm->add_option("--format", format, "text | json | dot");
  (void)par;

  auto* orbit = app.add_subcommand("orbit-poset", "B x B-orbit poset slice at J");
  orbit->add_option("type", type_s)->required();
  orbit->add_option("--lattice", lattice_s);
  orbit->add_option("--J", J_s, "subset of simple indices, e.g. 2 or 1,3");
  orbit->add_option("--format", format, "text | json | dot");

  auto* verify = app.add_subcommand("verify", "run a verification check");
  verify->add_option("check", check_s,
                     "helam-iso | adm-bijection | slice-formulas | "
                     "corollary-coverage | fiber-partition")
      ->required();
  verify->add_option("type", type_s)->required();
  verify->add_option("--lattice", lattice_s);
  verify->add_option("--mu", mu_s);
  auto* jopt = verify->add_option("--J", J_s);
  auto* yopt = verify->add_option("--Y", Y_s);

  auto* table = app.add_subcommand("table", "aggregate a manifest of instances");
  table->add_option("manifest", path_s, "path to manifest JSON")->required();
  table->add_option("--format", format, "text | tsv");

  auto* cache = app.add_subcommand("cache", "cache management");
  cache->add_option("action", cache_action, "stat | clear")->required();

  // let --jobs/--budget appear after the subcommand name as well
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalid;
  }

  try {
    lma::set_default_jobs(jobs);
    if (*roots) return cmd_roots(type_s, lattice_s, format);
    if (*adm) {
      has_parahoric = par->count() > 0;
      return cmd_adm(type_s, lattice_s, mu_s, parahoric_s, has_parahoric, format, budget);
    }
    if (*orbit) return cmd_orbit_poset(type_s, lattice_s, J_s, format, budget);
    if (*verify)
      return cmd_verify(check_s, type_s, lattice_s, mu_s, J_s, jopt->count() > 0, Y_s,
                        yopt->count() > 0, budget);
    if (*table) return cmd_table(path_s, format, budget);
    if (*cache) return cmd_cache(cache_action);
  } catch (const lma::ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const lma::InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const lma::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
