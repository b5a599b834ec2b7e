#include "frontis/cli.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frontis/enumerate.hpp"
#include "frontis/error.hpp"
#include "frontis/extension.hpp"
#include "frontis/filters.hpp"
#include "frontis/frontal.hpp"
#include "frontis/guards.hpp"
#include "frontis/io.hpp"
#include "frontis/props.hpp"

namespace frontis {

namespace {

using njson = nlohmann::ordered_json;

struct context {
  std::string format = "text";
  bool allow_nonfrontal_tau = false;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  bool structured() const { return format == "structured"; }
};

njson base_doc(const char* command) {
  njson j;
  j["format_version"] = 1;
  j["command"] = command;
  return j;
}

njson members_json(const subset& s) {
  njson a = njson::array();
  for (int i : s.members()) a.push_back(i);
  return a;
}

std::vector<std::string> label_vector(const hilbert_algebra& h) {
  std::vector<std::string> out;
  out.reserve(h.n);
  for (int i = 0; i < h.n; ++i) out.push_back(h.label(i));
  return out;
}

std::string map_line(const hilbert_algebra& h, const unary_map& t) {
  std::string s;
  for (int a = 0; a < h.n; ++a) {
    if (a) s += ", ";
    s += h.label(a) + " -> " + h.label(t(a));
  }
  return s;
}

algebra_ptr make_ptr(hilbert_algebra alg) {
  return std::make_shared<const hilbert_algebra>(std::move(alg));
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
}

/// Rejects a document whose tau is not a frontal operator, unless the
/// override flag downgrades that to a warning on the error stream.
algebra_document load_document(const std::string& path, const context& ctx,
                               bool tolerate_tau = false) {
  auto doc = load_algebra_file(path);
  if (doc.tau && !tolerate_tau) {
    auto r = check_frontal(doc.alg, *doc.tau, frontal_flavor::hilbert);
    if (!r.pass()) {
      if (!ctx.allow_nonfrontal_tau)
        throw validation_error(path + ": tau is not a frontal operator\n" + r.render(&doc.alg));
      *ctx.err << "warning: " << path << ": tau is not a frontal operator\n";
    }
  }
  return doc;
}

void require_class(const hilbert_algebra& h, algebra_class cls) {
  auto r = check_axioms(h, cls);
  if (!r.pass())
    throw validation_error(h.name + " fails the " + to_string(cls) + " laws\n" + r.render(&h));
}

std::vector<int> load_map_file(const std::string& path, int n, int limit) {
  auto j = read_json_file(path);
  if (!j.is_object() || !j.contains("map") || !j["map"].is_array())
    throw parse_error(path + ": expected an object with a map array");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "map") throw parse_error(path + ": unknown field " + it.key());
  const auto& arr = j["map"];
  if (static_cast<int>(arr.size()) != n)
    throw parse_error(path + ": map length " + std::to_string(arr.size()) + ", expected " +
                      std::to_string(n));
  std::vector<int> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw parse_error(path + ": map entries must be integers");
    int x = v.get<int>();
    if (x < 0 || x >= limit)
      throw range_error(path + ": map value " + std::to_string(x) + " out of range");
    out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------- check

int cmd_check(const context& ctx, const std::string& file, const std::string& cls_name) {
  auto cls = algebra_class_from_string(cls_name);
  auto doc = load_algebra_file(file);
  auto r = check_axioms(doc.alg, cls);
  report tau_r;
  if (doc.tau) {
    tau_r = check_frontal(doc.alg, *doc.tau, frontal_flavor::hilbert);
    tau_r.subject = "check tau";
  }
  bool pass = r.pass() && tau_r.pass();
  if (ctx.structured()) {
    auto j = base_doc("check");
    j["file"] = file;
    j["class"] = to_string(cls);
    j["name"] = doc.alg.name;
    j["pass"] = pass;
    j["report"] = report_to_json(r);
    if (doc.tau) j["tau_report"] = report_to_json(tau_r);
    *ctx.out << j.dump(2) << "\n";
  } else {
    *ctx.out << r.render(&doc.alg);
    if (doc.tau) *ctx.out << tau_r.render(&doc.alg);
  }
  return pass ? 0 : 1;
}

// ---------------------------------------------------------------- spectrum

int cmd_spectrum(const context& ctx, const std::string& file) {
  auto doc = load_document(file, ctx);
  require_class(doc.alg, algebra_class::hilbert);
  auto labels = label_vector(doc.alg);
  auto hp = make_ptr(std::move(doc.alg));
  auto sp = spectrum(hp);
  auto covers = sp.order.cover_pairs();
  if (ctx.structured()) {
    auto j = base_doc("spectrum");
    j["file"] = file;
    j["name"] = hp->name;
    j["elements"] = labels;
    j["points"] = njson::array();
    for (const auto& p : sp.points) j["points"].push_back(members_json(p));
    j["hasse"] = njson::array();
    for (auto [a, b] : covers) j["hasse"].push_back(njson::array({a, b}));
    *ctx.out << j.dump(2) << "\n";
  } else {
    *ctx.out << "spectrum of " << hp->name << ": " << sp.size() << " points\n";
    for (int i = 0; i < sp.size(); ++i)
      *ctx.out << "  P" << i << " = " << to_string(sp.points[i], &labels) << "\n";
    *ctx.out << "hasse:\n";
    if (covers.empty()) *ctx.out << "  (none)\n";
    for (auto [a, b] : covers) *ctx.out << "  P" << a << " < P" << b << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- extend

int cmd_extend(const context& ctx, const std::string& file) {
  auto doc = load_document(file, ctx);
  require_class(doc.alg, algebra_class::hilbert);
  auto src_labels = label_vector(doc.alg);
  auto hp = make_ptr(std::move(doc.alg));
  auto e = build_extension(hp);

  std::optional<unary_map> ext_op;
  bool tau_skipped = false;
  if (doc.tau) {
    if (is_frontal(*hp, *doc.tau))
      ext_op = extend_frontal(e, *doc.tau);
    else
      tau_skipped = true;
  }

  const auto& alg = *e.algebra;
  if (ctx.structured()) {
    auto j = base_doc("extend");
    j["file"] = file;
    j["source"] = hp->name;
    j["points"] = njson::array();
    for (const auto& p : e.sp.points) j["points"].push_back(members_json(p));
    j["elements"] = njson::array();
    for (size_t i = 0; i < e.elements.size(); ++i) {
      njson el;
      el["points"] = members_json(e.elements[i]);
      el["gens"] = e.gens[i];
      j["elements"].push_back(el);
    }
    njson phi_arr = njson::array();
    for (int a = 0; a < hp->n; ++a) phi_arr.push_back(e.phi_index(a));
    j["phi"] = phi_arr;
    j["algebra"] = emit_algebra_document({alg, ext_op});
    *ctx.out << j.dump(2) << "\n";
  } else {
    *ctx.out << alg.name << ": " << alg.n << " elements over " << e.sp.size()
             << " spectrum points\n";
    for (int i = 0; i < alg.n; ++i) {
      *ctx.out << "  E" << i << " = " << alg.label(i) << "  gens:";
      if (e.gens[i].empty()) *ctx.out << " (empty meet)";
      for (int a : e.gens[i]) *ctx.out << " " << src_labels[a];
      if (i == e.one) *ctx.out << "  [top]";
      if (e.zero && i == *e.zero) *ctx.out << "  [bottom]";
      *ctx.out << "\n";
    }
    *ctx.out << "phi:\n";
    for (int a = 0; a < hp->n; ++a)
      *ctx.out << "  " << src_labels[a] << " -> E" << e.phi_index(a) << "\n";
    *ctx.out << "imp:\n";
    for (int a = 0; a < alg.n; ++a) {
      *ctx.out << "  E" << a << ":";
      for (int b = 0; b < alg.n; ++b) *ctx.out << " E" << alg.imp_at(a, b);
      *ctx.out << "\n";
    }
    *ctx.out << "meet:\n";
    for (int a = 0; a < alg.n; ++a) {
      *ctx.out << "  E" << a << ":";
      for (int b = 0; b < alg.n; ++b) *ctx.out << " E" << alg.meet_at(a, b);
      *ctx.out << "\n";
    }
    if (ext_op) {
      *ctx.out << "tau:\n";
      for (int i = 0; i < alg.n; ++i) *ctx.out << "  E" << i << " -> E" << (*ext_op)(i) << "\n";
    } else if (tau_skipped) {
      *ctx.out << "tau: not frontal, no extension computed\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- lift

int cmd_lift(const context& ctx, const std::string& file1, const std::string& file2,
             const std::string& mapfile) {
  auto doc1 = load_document(file1, ctx);
  auto doc2 = load_document(file2, ctx);
  require_class(doc1.alg, algebra_class::hilbert);
  require_class(doc2.alg, algebra_class::hilbert);
  auto h1 = make_ptr(std::move(doc1.alg));
  auto h2 = make_ptr(std::move(doc2.alg));
  auto map = load_map_file(mapfile, h1->n, h2->n);

  homomorphism h{h1, h2, map, signature{}, {}, {}};
  if (!check_homomorphism(h)) {
    *ctx.err << mapfile << ": not a homomorphism " << h1->name << " -> " << h2->name << "\n";
    return 1;
  }
  auto e1 = build_extension(h1);
  auto e2 = build_extension(h2);
  auto lifted = lift_hom(h, e1, e2);
  if (ctx.structured()) {
    auto j = base_doc("lift");
    j["source"] = file1;
    j["target"] = file2;
    j["hom"] = map;
    j["source_elements"] = njson::array();
    for (const auto& u : e1.elements) j["source_elements"].push_back(members_json(u));
    j["target_elements"] = njson::array();
    for (const auto& u : e2.elements) j["target_elements"].push_back(members_json(u));
    j["lift"] = lifted.map;
    *ctx.out << j.dump(2) << "\n";
  } else {
    *ctx.out << "lift of " << h1->name << " -> " << h2->name << " along " << mapfile << ":\n";
    for (size_t i = 0; i < e1.elements.size(); ++i)
      *ctx.out << "  " << e1.algebra->label(static_cast<int>(i)) << " -> "
               << e2.algebra->label(lifted.map[i]) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- factor

int cmd_factor(const context& ctx, const std::string& file, const std::string& isfile,
               const std::string& mapfile) {
  auto doc = load_document(file, ctx);
  auto tdoc = load_document(isfile, ctx);
  require_class(doc.alg, algebra_class::hilbert);
  require_class(tdoc.alg, algebra_class::is);
  auto hp = make_ptr(std::move(doc.alg));
  auto ap = make_ptr(std::move(tdoc.alg));
  auto map = load_map_file(mapfile, hp->n, ap->n);

  homomorphism h{hp, ap, map, signature{}, {}, {}};
  if (!check_homomorphism(h)) {
    *ctx.err << mapfile << ": not a homomorphism " << hp->name << " -> " << ap->name << "\n";
    return 1;
  }
  auto e = build_extension(hp);
  auto f = universal_factor(e, ap, h);
  if (ctx.structured()) {
    auto j = base_doc("factor");
    j["source"] = file;
    j["target"] = isfile;
    j["hom"] = map;
    j["elements"] = njson::array();
    for (const auto& u : e.elements) j["elements"].push_back(members_json(u));
    j["factor"] = f.map;
    *ctx.out << j.dump(2) << "\n";
  } else {
    *ctx.out << "factor of " << hp->name << " -> " << ap->name << " through the extension:\n";
    for (size_t i = 0; i < e.elements.size(); ++i)
      *ctx.out << "  " << e.algebra->label(static_cast<int>(i)) << " -> "
               << ap->label(f.map[i]) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- frontal find

int cmd_frontal_find(const context& ctx, const std::string& file, const std::string& op) {
  auto doc = load_document(file, ctx);
  require_class(doc.alg, algebra_class::hilbert);
  const auto& alg = doc.alg;

  min_op_result r;
  if (op == "succ") r = find_successor(alg);
  else if (op == "gamma") r = find_gamma(alg);
  else r = find_gabbay(alg);

  if (ctx.structured()) {
    auto j = base_doc("frontal-find");
    j["file"] = file;
    j["op"] = op;
    j["found"] = r.map.has_value();
    if (r.map) j["map"] = r.map->map;
    else {
      j["misses"] = njson::array();
      for (const auto& m : r.misses) {
        njson mj;
        mj["at"] = m.a;
        mj["minimal"] = m.minimal;
        j["misses"].push_back(mj);
      }
    }
    *ctx.out << j.dump(2) << "\n";
  } else {
    if (r.map) {
      *ctx.out << op << " on " << alg.name << ": " << map_line(alg, *r.map) << "\n";
    } else {
      *ctx.out << "no " << op << " on " << alg.name << "\n";
      for (const auto& m : r.misses) {
        *ctx.out << "  at " << alg.label(m.a) << ": minimal candidates";
        for (int b : m.minimal) *ctx.out << " " << alg.label(b);
        *ctx.out << "\n";
      }
    }
  }
  return r.map ? 0 : 1;
}

// ---------------------------------------------------------------- frontal classify

int cmd_frontal_classify(const context& ctx, const std::string& file) {
  auto doc = load_document(file, ctx, /*tolerate_tau=*/true);
  require_class(doc.alg, algebra_class::hilbert);
  if (!doc.tau) throw precondition_error(file + ": classify needs a tau field");
  const auto& alg = doc.alg;
  const auto& t = *doc.tau;

  auto frontal_r = check_frontal(alg, t, frontal_flavor::hilbert);
  auto succ_r = check_successor(alg, t);
  std::optional<report> gamma_r, gabbay_r;
  if (alg.bounded()) {
    gamma_r = check_gamma(alg, t);
    gabbay_r = check_gabbay(alg, t);
  }

  if (ctx.structured()) {
    auto j = base_doc("frontal-classify");
    j["file"] = file;
    j["tau"] = t.map;
    j["frontal"] = report_to_json(frontal_r);
    j["successor"] = report_to_json(succ_r);
    j["gamma"] = gamma_r ? report_to_json(*gamma_r) : njson();
    j["gabbay"] = gabbay_r ? report_to_json(*gabbay_r) : njson();
    *ctx.out << j.dump(2) << "\n";
  } else {
    auto verdict = [](const std::optional<report>& r) {
      if (!r) return std::string("not applicable (no zero)");
      return std::string(r->pass() ? "yes" : "no");
    };
    *ctx.out << "tau on " << alg.name << ": " << map_line(alg, t) << "\n";
    *ctx.out << "  frontal:   " << (frontal_r.pass() ? "yes" : "no") << "\n";
    *ctx.out << "  successor: " << (succ_r.pass() ? "yes" : "no") << "\n";
    *ctx.out << "  gamma:     " << verdict(gamma_r) << "\n";
    *ctx.out << "  gabbay:    " << verdict(gabbay_r) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- poset ops

int cmd_poset_ops(const context& ctx, const std::string& file, const std::string& upset_spec,
                  bool upset_given) {
  auto p = load_poset_file(file);
  std::vector<subset> rows;
  if (upset_given) {
    subset u(p.size(), 0);
    std::stringstream ss(upset_spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      int x;
      try {
        x = std::stoi(item);
      } catch (const std::exception&) {
        throw parse_error("bad upset element: " + item);
      }
      if (x < 0 || x >= p.size()) throw range_error("upset element out of range: " + item);
      u.add(x);
    }
    if (!p.is_upset(u.bits))
      throw precondition_error(to_string(u) + " is not an upset of " + file);
    rows.push_back(u);
  } else {
    for (auto m : all_upsets(p)) rows.emplace_back(p.size(), m);
  }

  if (ctx.structured()) {
    auto j = base_doc("poset-ops");
    j["file"] = file;
    j["size"] = p.size();
    j["upsets"] = njson::array();
    for (const auto& u : rows) {
      njson row;
      row["upset"] = members_json(u);
      row["successor"] = members_json(poset_successor(p, u));
      j["upsets"].push_back(row);
    }
    *ctx.out << j.dump(2) << "\n";
  } else {
    *ctx.out << file << ": " << p.size() << " elements, successor (co-derivative) per upset:\n";
    for (const auto& u : rows)
      *ctx.out << "  S(" << to_string(u) << ") = " << to_string(poset_successor(p, u)) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- search

struct enumerate_bound_raiser {
  int saved;
  explicit enumerate_bound_raiser(int n) : saved(guards().enumerate_max_n) {
    if (n > saved) guards().enumerate_max_n = n;
  }
  ~enumerate_bound_raiser() { guards().enumerate_max_n = saved; }
};

int cmd_search(const context& ctx, int size, const std::string& cls_name,
               const std::string& without) {
  auto cls = algebra_class_from_string(cls_name);
  if (cls == algebra_class::heyting_upsets)
    throw precondition_error("search does not enumerate heyting_upsets");

  enumerate_bound_raiser raise(size);
  std::vector<hilbert_algebra> algs;
  if (without.empty()) {
    if (cls == algebra_class::hilbert || cls == algebra_class::bounded_hilbert)
      algs = enumerate_algebras(size, cls);
    else
      algs = enumerate_semilattices(size, cls == algebra_class::bounded_is);
  } else {
    canonical_op op = without == "succ"    ? canonical_op::successor
                      : without == "gamma" ? canonical_op::gamma
                                           : canonical_op::gabbay;
    algs = search_without(size, cls, op);
  }

  if (ctx.structured()) {
    auto j = base_doc("search");
    j["size"] = size;
    j["class"] = to_string(cls);
    if (!without.empty()) j["without"] = without;
    j["count"] = algs.size();
    j["algebras"] = njson::array();
    for (const auto& h : algs) {
      njson a;
      a["one"] = h.one;
      if (h.zero) a["zero"] = *h.zero;
      njson imp = njson::array();
      for (int x = 0; x < h.n; ++x) {
        njson row = njson::array();
        for (int y = 0; y < h.n; ++y) row.push_back(h.imp_at(x, y));
        imp.push_back(row);
      }
      a["imp"] = imp;
      if (h.meet) {
        njson meet = njson::array();
        for (int x = 0; x < h.n; ++x) {
          njson row = njson::array();
          for (int y = 0; y < h.n; ++y) row.push_back(h.meet_at(x, y));
          meet.push_back(row);
        }
        a["meet"] = meet;
      }
      j["algebras"].push_back(a);
    }
    *ctx.out << j.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < algs.size(); ++i) {
      const auto& h = algs[i];
      *ctx.out << "#" << i << "  imp=[";
      for (int x = 0; x < h.n; ++x) {
        if (x) *ctx.out << ",";
        *ctx.out << "[";
        for (int y = 0; y < h.n; ++y) {
          if (y) *ctx.out << ",";
          *ctx.out << h.imp_at(x, y);
        }
        *ctx.out << "]";
      }
      *ctx.out << "]  one=" << h.one;
      if (h.zero) *ctx.out << "  zero=" << *h.zero;
      *ctx.out << "\n";
    }
    *ctx.out << "count: " << algs.size() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- verify

algebra_class widest_class(const hilbert_algebra& h) {
  if (h.has_meet() && h.bounded()) return algebra_class::bounded_is;
  if (h.has_meet()) return algebra_class::is;
  if (h.bounded()) return algebra_class::bounded_hilbert;
  return algebra_class::hilbert;
}

algebra_ptr two_chain_semilattice() {
  hilbert_algebra h;
  h.n = 2;
  h.imp = {1, 1, 0, 1};
  h.one = 1;
  h.zero = 0;
  h.meet = std::vector<std::uint8_t>{0, 0, 0, 1};
  h.name = "2-chain";
  return make_ptr(std::move(h));
}

int finish_verify(const context& ctx, const std::string& file,
                  const std::vector<report>& suites, const hilbert_algebra* alg) {
  bool pass = true;
  for (const auto& s : suites) pass = pass && s.pass();
  if (ctx.structured()) {
    auto j = base_doc("verify");
    j["file"] = file;
    j["pass"] = pass;
    j["suites"] = njson::array();
    for (const auto& s : suites) j["suites"].push_back(report_to_json(s));
    *ctx.out << j.dump(2) << "\n";
  } else {
    for (const auto& s : suites) {
      if (s.pass())
        *ctx.out << "ok   " << s.subject << "\n";
      else
        *ctx.out << "FAIL " << s.subject << "\n" << s.render(alg);
    }
    *ctx.out << (pass ? "pass" : "FAIL") << " " << file << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_verify(const context& ctx, const std::string& file) {
  auto j = read_json_file(file);
  if (j.is_object() && (j.contains("leq") || j.contains("covers"))) {
    auto p = parse_poset_document(j);
    std::vector<report> suites;
    suites.push_back(props::poset_successor_laws(p));
    suites.push_back(props::union_of_maximals_identity(p));
    suites.push_back(props::up_implication_routes(p));
    auto heyting = check_axioms(upset_algebra(p), algebra_class::heyting_upsets);
    heyting.subject = "upset algebra laws";
    suites.push_back(heyting);
    return finish_verify(ctx, file, suites, nullptr);
  }

  auto doc = parse_algebra_document(j);
  if (doc.alg.name.empty()) doc.alg.name = file;
  auto cls = widest_class(doc.alg);
  auto hp = make_ptr(doc.alg);
  std::vector<report> suites;
  suites.push_back(check_axioms(*hp, cls));
  if (!suites.back().pass()) return finish_verify(ctx, file, suites, &doc.alg);

  suites.push_back(props::basic_laws(*hp));
  suites.push_back(props::filter_oracles(hp));
  suites.push_back(props::filter_lattice_distributive(hp));
  suites.push_back(props::irreducibility_criterion(hp));
  suites.push_back(props::separation_laws(hp));
  suites.push_back(props::phi_laws(hp));
  auto sp = spectrum(hp);
  suites.push_back(props::up_implication_routes(sp.order));
  suites.push_back(props::extension_invariants(hp));
  suites.push_back(props::spectrum_downset_identity(hp));
  suites.push_back(props::union_of_maximals_identity(sp.order));

  auto e = build_extension(hp);
  suites.push_back(props::universal_property(e, two_chain_semilattice()));
  if (hp->has_meet() && check_axioms(*hp, algebra_class::is).pass())
    suites.push_back(props::universal_property(e, hp));
  suites.push_back(props::min_op_oracles(*hp));
  suites.push_back(props::closed_form_agreement(hp));

  if (doc.tau) {
    auto fr = check_frontal(*hp, *doc.tau, frontal_flavor::hilbert);
    fr.subject = "tau frontal laws";
    suites.push_back(fr);
    if (fr.pass()) suites.push_back(props::frontal_image_laws(e, *doc.tau));
  }
  return finish_verify(ctx, file, suites, &doc.alg);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite Hilbert algebras: filter spectra, semilattice extensions, frontal operators"};
  app.name("frontis");
  app.require_subcommand(1);

  context ctx;
  ctx.out = &out;
  ctx.err = &err;
  app.add_option("--format", ctx.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--allow-nonfrontal-tau", ctx.allow_nonfrontal_tau,
               "only warn when a document's tau fails the frontal laws");

  std::string check_file, check_class = "hilbert";
  auto* sc_check = app.add_subcommand("check", "run the axiom suite for a class");
  sc_check->fallthrough();
  sc_check->add_option("file", check_file, "algebra document")->required();
  sc_check->add_option("--class", check_class, "algebra class")
      ->check(CLI::IsMember({"hilbert", "bounded_hilbert", "is", "bounded_is", "heyting_upsets"}));

  std::string spectrum_file;
  auto* sc_spectrum = app.add_subcommand("spectrum", "irreducible filters under inclusion");
  sc_spectrum->fallthrough();
  sc_spectrum->add_option("file", spectrum_file, "algebra document")->required();

  std::string extend_file;
  auto* sc_extend = app.add_subcommand("extend", "the free implicative semilattice extension");
  sc_extend->fallthrough();
  sc_extend->add_option("file", extend_file, "algebra document")->required();

  std::string lift_file1, lift_file2, lift_map;
  auto* sc_lift = app.add_subcommand("lift", "lift a homomorphism to the extensions");
  sc_lift->fallthrough();
  sc_lift->add_option("file1", lift_file1, "source algebra document")->required();
  sc_lift->add_option("file2", lift_file2, "target algebra document")->required();
  sc_lift->add_option("--hom", lift_map, "map file {\"map\": [...]}")->required();

  std::string factor_file, factor_into, factor_map;
  auto* sc_factor = app.add_subcommand("factor", "factor a map through the extension");
  sc_factor->fallthrough();
  sc_factor->add_option("file", factor_file, "source algebra document")->required();
  sc_factor->add_option("--into", factor_into, "implicative semilattice document")->required();
  sc_factor->add_option("--hom", factor_map, "map file {\"map\": [...]}")->required();

  auto* sc_frontal = app.add_subcommand("frontal", "canonical frontal operators");
  sc_frontal->fallthrough();
  sc_frontal->require_subcommand(1);
  std::string find_file, find_op;
  auto* sc_find = sc_frontal->add_subcommand("find", "least operator of the requested kind");
  sc_find->fallthrough();
  sc_find->add_option("file", find_file, "algebra document")->required();
  sc_find->add_option("--op", find_op, "operator kind")
      ->required()
      ->check(CLI::IsMember({"gamma", "succ", "gabbay"}));
  std::string classify_file;
  auto* sc_classify = sc_frontal->add_subcommand("classify", "laws satisfied by the document's tau");
  sc_classify->fallthrough();
  sc_classify->add_option("file", classify_file, "algebra document with tau")->required();

  auto* sc_poset = app.add_subcommand("poset", "operations on finite posets");
  sc_poset->fallthrough();
  sc_poset->require_subcommand(1);
  std::string poset_file, poset_upset;
  auto* sc_ops = sc_poset->add_subcommand("ops", "successor of upsets");
  sc_ops->fallthrough();
  sc_ops->add_option("file", poset_file, "poset document")->required();
  auto* upset_opt = sc_ops->add_option("--upset", poset_upset, "comma-separated element indices");

  int search_size = 0;
  std::string search_class = "hilbert", search_without;
  auto* sc_search = app.add_subcommand("search", "canonical representatives by size");
  sc_search->fallthrough();
  sc_search->add_option("--size", search_size, "carrier size")->required()->check(CLI::Range(1, 16));
  sc_search->add_option("--class", search_class, "algebra class")
      ->check(CLI::IsMember({"hilbert", "bounded_hilbert", "is", "bounded_is"}));
  sc_search->add_option("--without", search_without, "keep algebras lacking this operator")
      ->check(CLI::IsMember({"succ", "gamma", "gabbay"}));

  std::string verify_file;
  auto* sc_verify = app.add_subcommand("verify", "full invariant suite for a fixture");
  sc_verify->fallthrough();
  sc_verify->add_option("file", verify_file, "algebra or poset document")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("frontis");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*sc_check) return cmd_check(ctx, check_file, check_class);
    if (*sc_spectrum) return cmd_spectrum(ctx, spectrum_file);
    if (*sc_extend) return cmd_extend(ctx, extend_file);
    if (*sc_lift) return cmd_lift(ctx, lift_file1, lift_file2, lift_map);
    if (*sc_factor) return cmd_factor(ctx, factor_file, factor_into, factor_map);
    if (*sc_find) return cmd_frontal_find(ctx, find_file, find_op);
    if (*sc_classify) return cmd_frontal_classify(ctx, classify_file);
    if (*sc_ops) return cmd_poset_ops(ctx, poset_file, poset_upset, upset_opt->count() > 0);
    if (*sc_search) return cmd_search(ctx, search_size, search_class, search_without);
    if (*sc_verify) return cmd_verify(ctx, verify_file);
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::parse:
      case errc::range:
      case errc::precondition:
      case errc::guard:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace frontis
