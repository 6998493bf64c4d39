#include "labshift/json_io.hpp"
#include "labshift/partition.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace labshift;

namespace {

struct Opts {
  std::string preset = "strict";
  int b = 0, base = 0;  // overrides the preset when both given
  std::string partition = "dyadic";
  long long n = 8;
  int horizon = 40;
  std::string format = "json";
  unsigned long long seed = 0;
};

ExpandingSystem make_sys(const Opts& o) {
  if (o.b > 0 && o.base > 0) return ExpandingSystem::power(o.b, o.base);
  return ExpandingSystem::preset(o.preset);
}

Label parse_label(const std::string& text) {
  return label_from_json(json::parse(text));
}

std::vector<NVector> parse_nvector_list(const std::string& text) {
  json j = json::parse(text);
  std::vector<NVector> out;
  for (const auto& e : j) out.push_back(nvector_from_json(e));
  return out;
}

// {"meta":{...},"result":{...}} on one stable layout
void emit(const Opts& o, const std::string& command, json meta, const json& result) {
  meta["command"] = command;
  meta["seed"] = o.seed;
  json out{{"meta", meta}, {"result", result}};
  std::cout << out.dump(2) << "\n";
}

int exit_for(const PropertyReport& rep) {
  if (rep.verdict == Verdict::holds) return 0;
  if (rep.verdict == Verdict::fails) return 1;
  return 2;
}

std::string pgm_of(const SubshiftWindow& w) {
  std::ostringstream os;
  os << "P2\n" << (2 * w.n + 1) << " 1\n1\n";
  for (long long p = -w.n; p <= w.n; ++p) os << (w.bit(p) ? 1 : 0) << (p == w.n ? '\n' : ' ');
  return os.str();
}

void load_config(Opts& o) {
  const char* path = std::getenv("LABSHIFT_CONFIG");
  if (!path) return;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(std::string("config file unreadable: ") + path);
  json cfg = json::parse(in);
  if (cfg.contains("preset")) o.preset = cfg["preset"].get<std::string>();
  if (cfg.contains("b")) o.b = cfg["b"].get<int>();
  if (cfg.contains("base")) o.base = cfg["base"].get<int>();
  if (cfg.contains("partition")) o.partition = cfg["partition"].get<std::string>();
  if (cfg.contains("N")) o.n = cfg["N"].get<long long>();
  if (cfg.contains("horizon")) o.horizon = cfg["horizon"].get<int>();
  if (cfg.contains("format")) o.format = cfg["format"].get<std::string>();
  if (cfg.contains("seed")) o.seed = cfg["seed"].get<unsigned long long>();
}

}  // namespace

int main(int argc, char** argv) {
  Opts o;
  try {
    load_config(o);
  } catch (const std::exception& e) {
    std::cerr << "labshift: " << e.what() << "\n";
    return 64;
  }

  CLI::App app{"window-exact toolkit for labeled subshifts over expanding numerations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--preset", o.preset, "expanding system preset (strict|paper)");
  app.add_option("--b", o.b, "expansion constant for --b/--base systems");
  app.add_option("--base", o.base, "power base for --b/--base systems");
  app.add_option("--partition", o.partition, "coordinate partition name");
  app.add_option("--N", o.n, "window size");
  app.add_option("--horizon", o.horizon, "limit horizon");
  app.add_option("--format", o.format, "json|text|ascii-window|pgm");
  app.add_option("--seed", o.seed, "recorded in the output header");

  std::string t_str, lo_str = "-50", hi_str = "50", mode = "full";
  std::string label_str, left_str, right_str, direction, which, powers = "3:9";
  std::string set_name, cand_name = "auto", radius_str = "200", f_str, shift_str = "0";
  std::vector<long long> s_digits;
  long long depth = 0, count = 3, threshold = 25;
  int cert_n = -1, max_coord = 24, max_norm = -1;
  bool plus = false;

  auto* c_expand = app.add_subcommand("expand", "recognize one time");
  c_expand->add_option("--t", t_str, "integer to expand")->required();

  auto* c_ip = app.add_subcommand("ip", "list recognized times in an interval");
  c_ip->add_option("--lo", lo_str);
  c_ip->add_option("--hi", hi_str);
  c_ip->add_option("--mode", mode, "full|positive|restricted");
  c_ip->add_option("--s", s_digits, "restricted mode: fixed top digits");
  c_ip->add_option("--depth", depth, "restricted mode: free positions below");

  auto* c_density = app.add_subcommand("density", "counting profile over powers of the base");
  c_density->add_option("--powers", powers, "exponent range lo:hi");

  auto* c_label = app.add_subcommand("label", "evaluate a label and list its window");
  c_label->add_option("--label", label_str)->required();

  auto* c_window = app.add_subcommand("window", "bit window of a label's point");
  c_window->add_option("--label", label_str)->required();
  c_window->add_option("--shift", shift_str, "absolute window center");
  c_window->add_flag("--plus", plus, "positive-digit point");

  auto* c_metric = app.add_subcommand("metric", "window distance of two labels");
  c_metric->add_option("--label", left_str)->required();
  c_metric->add_option("--label2", right_str)->required();

  auto* c_limit = app.add_subcommand("limit", "window limit along a named escape direction");
  c_limit->add_option("--label", label_str)->required();
  c_limit->add_option("--direction", direction)->required();

  auto* c_theta = app.add_subcommand("theta", "orbit closure of a finite label");
  c_theta->add_option("--label", label_str)->required();

  auto* c_height = app.add_subcommand("height", "descent height of a finite label");
  c_height->add_option("--label", label_str)->required();

  auto* c_check = app.add_subcommand("check", "window-honest property verdict");
  c_check->add_option("--label", label_str)->required();
  c_check->add_option("--which", which, "finite-type|finitary|simple|recurrent|strongly-recurrent|flat|sublattice")->required();

  auto* c_certify = app.add_subcommand("certify", "independence certificate over subsets of F");
  c_certify->add_option("--label", label_str)->required();
  c_certify->add_option("--n", cert_n, "builtin ladder stage");
  c_certify->add_option("--F", f_str, "JSON list of members; defaults per builtin");
  c_certify->add_option("--max-coord", max_coord, "search pool bound");
  c_certify->add_option("--max-norm", max_norm, "witness norm cap, -1 = none");

  auto* c_tf = app.add_subcommand("tf", "translation-finiteness probe");
  c_tf->add_option("--set", set_name, "evens|odds|even-pos-odd-neg|label-time")->required();
  c_tf->add_option("--label", label_str, "label for --set label-time");
  c_tf->add_flag("--plus", plus, "positive-digit time set");
  c_tf->add_option("--B", cand_name, "auto|evens|odds|label-pair");
  c_tf->add_option("--radius", radius_str);
  c_tf->add_option("--threshold", threshold);

  auto* c_witness = app.add_subcommand("witness", "escaping times separating two labels");
  c_witness->add_option("--label", left_str)->required();
  c_witness->add_option("--label2", right_str)->required();
  c_witness->add_option("--count", count);

  auto* c_zoo = app.add_subcommand("zoo-verify", "run every declared tag through its checker");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (c_expand->parsed()) {
      ExpandingSystem sys = make_sys(o);
      auto e = expand(sys, from_dec(t_str));
      if (!e) {
        emit(o, "expand", {{"preset", sys.name()}}, json{{"recognized", false}, {"t", t_str}});
        return 1;
      }
      emit(o, "expand", {{"preset", sys.name()}}, expansion_json(*e));
      return 0;
    }

    if (c_ip->parsed()) {
      ExpandingSystem sys = make_sys(o);
      IpMode m = IpMode::full;
      if (mode == "positive" || mode == "plus") {
        m = IpMode::positive;
        mode = "positive";
      } else if (mode == "restricted") {
        m = IpMode::restricted;
      } else if (mode != "full") {
        std::cerr << "labshift: --mode must be full, positive, or restricted\n";
        return 64;
      }
      RestrictedSpec spec{s_digits, depth};
      IpInterval iv = ip_in_interval(sys, from_dec(lo_str), from_dec(hi_str), m,
                                     m == IpMode::restricted ? &spec : nullptr);
      if (o.format == "text") {
        for (const auto& v : iv.values) std::cout << to_dec(v) << "\n";
        return 0;
      }
      emit(o, "ip", {{"preset", sys.name()}},
           interval_json(iv, from_dec(lo_str), from_dec(hi_str), mode));
      return 0;
    }

    if (c_density->parsed()) {
      ExpandingSystem sys = make_sys(o);
      auto colon = powers.find(':');
      if (colon == std::string::npos) {
        std::cerr << "labshift: --powers wants lo:hi\n";
        return 64;
      }
      int e_lo = std::stoi(powers.substr(0, colon));
      int e_hi = std::stoi(powers.substr(colon + 1));
      std::vector<Int> ns;
      for (int e = e_lo; e <= e_hi; ++e) ns.push_back(ipow(Int(sys.base()), e));
      DensityReport rep = density_report(sys, ns);
      bool all = true;
      for (const auto& r : rep.rows) all = all && r.within_bound;
      emit(o, "density", {{"preset", sys.name()}}, density_json(rep));
      return all ? 0 : 1;
    }

    if (c_label->parsed()) {
      Label l = parse_label(label_str);
      const auto& win = l.window(static_cast<int>(o.n));
      json members = json::array();
      for (const auto& m : win) members.push_back(nvector_json(m));
      emit(o, "label", {{"N", o.n}},
           json{{"N", o.n},
                {"count", win.size()},
                {"describe", l.describe()},
                {"members", members}});
      return 0;
    }

    if (c_window->parsed()) {
      ExpandingSystem sys = make_sys(o);
      PartitionScheme part = partition_by_name(o.partition);
      Label l = parse_label(label_str);
      SubshiftWindow w = point_window(sys, part, l, o.n, from_dec(shift_str), plus);
      if (o.format == "ascii-window" || o.format == "text") {
        std::cout << w.ascii() << "\n";
        return 0;
      }
      if (o.format == "pgm") {
        std::cout << pgm_of(w);
        return 0;
      }
      emit(o, "window", {{"preset", sys.name()}, {"partition", part.name}}, window_json(w));
      return 0;
    }

    if (c_metric->parsed()) {
      MetricResult m = metric(parse_label(left_str), parse_label(right_str),
                              static_cast<int>(o.n));
      if (o.format == "text") {
        std::cout << m.str() << "\n";
        return 0;
      }
      emit(o, "metric", {{"N", o.n}}, metric_json(m));
      return 0;
    }

    if (c_limit->parsed()) {
      Label l = parse_label(label_str);
      auto z = l.zoo();
      if (!z) throw std::invalid_argument("limit: the label declares no escape directions");
      const EscapeSequence* seq = nullptr;
      for (const auto& s : z->sequences)
        if (s.name == direction) seq = &s;
      if (!seq) throw std::invalid_argument("limit: unknown direction " + direction);
      auto steps = [&](int i) { return l.minus(seq->r(i)); };
      LimitResult r = limit_window(steps, o.horizon, static_cast<int>(o.n));
      json res = limit_json(r);
      res["direction"] = direction;
      emit(o, "limit", {{"N", o.n}, {"horizon", o.horizon}}, res);
      return r.converged ? 0 : 2;
    }

    if (c_theta->parsed()) {
      std::vector<Label> th = theta(parse_label(label_str));
      json labels = json::array();
      for (const auto& l : th) labels.push_back(label_json(l));
      emit(o, "theta", json::object(), json{{"count", th.size()}, {"labels", labels}});
      return 0;
    }

    if (c_height->parsed()) {
      Label l = parse_label(label_str);
      HeightReport h = height(l);
      HeightStarReport s = height_star(l);
      emit(o, "height", json::object(),
           json{{"height", height_json(h)}, {"height_star", height_star_json(s)}});
      return 0;
    }

    if (c_check->parsed()) {
      Label l = parse_label(label_str);
      CheckParams cp;
      cp.n = static_cast<int>(o.n);
      cp.horizon = o.horizon;
      PropertyReport rep = property_check(l, property_kind_from(which), cp);
      if (o.format == "text") {
        std::cout << report_json(rep).dump(2) << "\n";
        return exit_for(rep);
      }
      emit(o, "check", {{"N", o.n}, {"horizon", o.horizon}}, report_json(rep));
      return exit_for(rep);
    }

    if (c_certify->parsed()) {
      json lj = json::parse(label_str);
      if (cert_n >= 0 && lj.value("kind", "") == "builtin")
        lj["params"]["n"] = std::to_string(cert_n);
      Label l = label_from_json(lj);
      std::vector<NVector> f;
      if (!f_str.empty()) {
        f = parse_nvector_list(f_str);
      } else if (lj.value("kind", "") == "builtin") {
        std::string name = lj["name"].get<std::string>();
        std::map<std::string, std::string> params;
        if (lj.contains("params"))
          for (const auto& [k, v] : lj["params"].items()) params[k] = v.get<std::string>();
        ZooEntry entry = zoo_get(name, params);
        if (name == "ex11a") {
          int a_lo = std::stoi(entry.params.at("a_lo"));
          int stage = std::stoi(entry.params.at("n"));
          for (int i = 0; i < stage; ++i) f.push_back(NVector::unit(a_lo + i));
        } else if (name == "ex11b") {
          f = {NVector::unit(1), NVector::unit(3)};
        }
      }
      if (f.empty()) throw std::invalid_argument("certify: no F given and no default applies");
      IndependenceCertificate cert = independence_certificate(l, f, max_coord, max_norm);
      emit(o, "certify", {{"max_coord", max_coord}, {"max_norm", max_norm}},
           certificate_json(cert));
      return cert.ok ? 0 : 1;
    }

    if (c_tf->parsed()) {
      Int radius = from_dec(radius_str);
      std::optional<IntSetOracle> a;
      ExpandingSystem sys = make_sys(o);
      PartitionScheme part = partition_by_name(o.partition);
      std::optional<Label> l;
      if (set_name == "evens") a = evens_set();
      else if (set_name == "odds") a = odds_set();
      else if (set_name == "even-pos-odd-neg") a = ruppert_set();
      else if (set_name == "label-time") {
        if (label_str.empty())
          throw std::invalid_argument("tf: --set label-time needs --label");
        l = parse_label(label_str);
        a = time_set(sys, part, *l, plus);
      } else {
        std::cerr << "labshift: unknown --set " << set_name << "\n";
        return 64;
      }
      std::vector<TFCandidate> cands;
      if (cand_name == "auto") {
        cands = auto_candidates(*a, radius.convert_to<long long>());
      } else if (cand_name == "evens") {
        cands.push_back(TFCandidate{"evens", evens_set(), {}, {}});
      } else if (cand_name == "odds") {
        cands.push_back(TFCandidate{"odds", odds_set(), {}, {}});
      } else if (cand_name == "label-pair") {
        if (!l) throw std::invalid_argument("tf: --B label-pair needs --set label-time");
        NVector pair_member;
        for (const auto& m : l->window(8))
          if (m.norm() == 2 && m.size() == 2) {
            pair_member = m;
            break;
          }
        if (pair_member.is_zero())
          throw std::invalid_argument("tf: the label has no two-coordinate member in B_8");
        cands.push_back(label_pair_candidate(sys, part, pair_member, threshold + 5));
      } else {
        std::cerr << "labshift: unknown --B " << cand_name << "\n";
        return 64;
      }
      TFReport rep = tf_check(*a, radius, cands, threshold);
      emit(o, "tf", {{"radius", radius_str}, {"threshold", threshold}}, tf_json(rep));
      if (rep.refuted()) return 1;
      return rep.verdict == "tf-on-window" ? 0 : 2;
    }

    if (c_witness->parsed()) {
      ExpandingSystem sys = make_sys(o);
      PartitionScheme part = partition_by_name(o.partition);
      EscapeWitness w = nonasymptotic_witness(sys, part, parse_label(left_str),
                                              parse_label(right_str), o.n, count);
      json times = json::array();
      for (const auto& t : w.times) times.push_back(to_dec(t));
      emit(o, "witness", {{"preset", sys.name()}, {"N", o.n}},
           json{{"found", w.found},
                {"swapped", w.swapped},
                {"r", nvector_json(w.r)},
                {"times", times},
                {"check_radius", w.check_radius},
                {"verified", w.verified},
                {"detail", w.detail}});
      return w.found && w.verified ? 0 : 2;
    }

    if (c_zoo->parsed()) {
      ZooVerifyReport rep = zoo_verify(static_cast<int>(o.n), o.horizon);
      if (o.format == "text") {
        for (const auto& row : rep.rows)
          std::cout << row.entry << " " << row.tag << ": "
                    << (row.ok ? "ok" : "CONTRADICTED") << "\n";
        return rep.all_ok ? 0 : 1;
      }
      emit(o, "zoo-verify", {{"N", o.n}, {"horizon", o.horizon}}, zoo_verify_json(rep));
      return rep.all_ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "labshift: " << e.what() << "\n";
    return 65;
  }
  return 64;
}
