// tasepkit: command-line front end for the tasep library.

#include "CLI11.hpp"

#include "tasep/cache.hpp"
#include "tasep/continuum.hpp"
#include "tasep/count.hpp"
#include "tasep/emit.hpp"
#include "tasep/markov.hpp"
#include "tasep/mlq.hpp"
#include "tasep/parallel.hpp"
#include "tasep/poly.hpp"
#include "tasep/rs.hpp"
#include "tasep/suite.hpp"
#include "tasep/tableaux.hpp"

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace tasep;
using emit::Json;

namespace {

struct Output {
  Json json;
  std::optional<std::string> csv;
  int exit_code = 0;
};

struct Globals {
  std::uint64_t seed = 7;
  int jobs = 1;
  std::string format = "json";
  std::string cache_dir;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "1,1,2" with an implied last class of vacancies when the sum is below N.
TypeVector type_from(const std::string& m, int N) {
  std::vector<int> counts = parse_int_list(m);
  return TypeVector(counts, N);
}

count::PositionVector positions(const std::string& b, int N) {
  count::PositionVector pos{parse_int_list(b), N};
  count::validate(pos);
  return pos;
}

/// Rows separated by ';', positions by ','.
std::vector<std::vector<int>> parse_rows(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    rows.push_back(parse_int_list(text.substr(start, end - start)));
    start = end + 1;
  }
  return rows;
}

Json labeled_json(const mlq::LabeledMLQ& l) {
  Json rows = Json::array();
  for (int r = 0; r < l.base.rows(); ++r)
    rows.push_back(Json{{"positions", l.base.row(r)}, {"labels", l.labels[r]}});
  Json paths = Json::array();
  for (const auto& p : l.paths) {
    Json cells = Json::array();
    for (const auto& c : p.cells) cells.push_back(Json::array({c.row, c.pos}));
    paths.push_back(Json{{"label", p.label}, {"wraps", p.wraps}, {"cells", cells}});
  }
  return Json{{"rows", rows}, {"bottom", to_string(mlq::bottom_word(l))}, {"paths", paths}};
}

std::string reports_csv(const std::vector<suite::VerificationReport>& reports) {
  std::string s = "id,severity,status,checked,mismatches,seconds\n";
  for (const auto& r : reports)
    s += r.id + "," + suite::to_string(r.severity) + "," + suite::to_string(r.status) + "," +
         std::to_string(r.checked) + "," + std::to_string(r.mismatches) + "," + emit::format_double(r.seconds) + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo computations for the multi-type TASEP on a ring"};
  app.require_subcommand(1);
  // global flags may follow the subcommand
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "master seed for Monte Carlo")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads")->capture_default_str();
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "result cache directory")->envname(cache::kCacheDirEnv);

  std::function<Output()> action;
  bool cacheable = true;

  // ---- tasep ----
  auto* tasep_cmd = app.add_subcommand("tasep", "the m-TASEP on a ring");
  tasep_cmd->require_subcommand(1);
  struct {
    std::string m;
    int N = 0;
    std::string method = "exact";
    long samples = 100000;
    long burn_in = 10000;
    int k = 1;
    std::string word;
    int site = 0;
  } t;
  {
    auto* s = tasep_cmd->add_subcommand("stationary", "stationary distribution");
    s->add_option("--m", t.m, "class counts, e.g. 1,1,1")->required();
    s->add_option("--N", t.N, "ring size")->required();
    s->add_option("--method", t.method, "exact, rotation or mc")
        ->check(CLI::IsMember({"exact", "rotation", "mc"}))
        ->capture_default_str();
    s->add_option("--samples", t.samples, "Monte Carlo samples")->capture_default_str();
    s->add_option("--burn-in", t.burn_in, "Monte Carlo burn-in per chain")->capture_default_str();
    s->callback([&] {
      action = [&] {
        const TypeVector type = type_from(t.m, t.N);
        Output out;
        if (t.method == "mc") {
          markov::McOptions o;
          o.samples = t.samples;
          o.burn_in = t.burn_in;
          o.seed = g.seed;
          o.jobs = g.jobs;
          out.json = emit::to_json(markov::mc_stationary(type, o));
          return out;
        }
        const auto d = t.method == "exact" ? markov::stationary_exact(type) : markov::stationary_by_rotation(type);
        out.json = emit::to_json(d, type);
        out.csv = emit::stationary_csv(d);
        return out;
      };
    });
    auto* k = tasep_cmd->add_subcommand("ktasep", "stationary distribution of the k-subset chain");
    k->add_option("--m", t.m)->required();
    k->add_option("--N", t.N)->required();
    k->add_option("--k", t.k)->required();
    k->callback([&] {
      action = [&] {
        const TypeVector type = type_from(t.m, t.N);
        const auto space = markov::state_space(type);
        const auto d = markov::stationary_exact(space, markov::k_tasep_matrix(space, t.k));
        const auto base = markov::stationary_exact(space, markov::transition_matrix(space));
        Output out;
        out.json = emit::to_json(d, type);
        out.json["k"] = t.k;
        out.json["equals_tasep"] = d.prob == base.prob;
        out.csv = emit::stationary_csv(d);
        return out;
      };
    });
    auto* st = tasep_cmd->add_subcommand("step", "ring the bell at one site");
    st->add_option("--word", t.word, "e.g. 21.3 ('.' vacant)")->required();
    st->add_option("--site", t.site)->required();
    st->callback([&] {
      action = [&] {
        Output out;
        out.json = Json{{"word", t.word}, {"site", t.site},
                        {"result", to_string(markov::tasep_step(parse_ring_word(t.word), t.site))}};
        return out;
      };
    });
  }

  // ---- mlq ----
  auto* mlq_cmd = app.add_subcommand("mlq", "multiline queues");
  mlq_cmd->require_subcommand(1);
  struct {
    std::string m;
    int N = 0;
    std::string rows;
    std::string word;
    std::string boxes;
    int n = 3;
  } q;
  {
    auto* l = mlq_cmd->add_subcommand("label", "label a discrete MLQ and trace bully paths");
    l->add_option("--m", q.m)->required();
    l->add_option("--N", q.N)->required();
    l->add_option("--rows", q.rows, "rows top first, e.g. \"1;0,2\"")->required();
    l->callback([&] {
      action = [&] {
        Output out;
        out.json = labeled_json(mlq::label_mlq(mlq::DiscreteMLQ(type_from(q.m, q.N), parse_rows(q.rows))));
        return out;
      };
    });
    auto* lr = mlq_cmd->add_subcommand("last-row", "one step of the last-row map");
    lr->add_option("--word", q.word)->required();
    lr->add_option("--boxes", q.boxes, "new box positions")->required();
    lr->callback([&] {
      action = [&] {
        Output out;
        out.json = Json{{"word", q.word},
                        {"boxes", parse_int_list(q.boxes)},
                        {"result", to_string(mlq::last_row_step(parse_ring_word(q.word), parse_int_list(q.boxes)))}};
        return out;
      };
    });
    auto* sa = mlq_cmd->add_subcommand("sample", "uniform continuous arrangement and its bottom permutation");
    sa->add_option("--n", q.n)->required();
    sa->callback([&] {
      action = [&] {
        mlq::Rng rng(g.seed);
        const auto a = mlq::sample_arrangement(q.n, rng);
        Output out;
        out.json = Json{{"order", a.order()}, {"bottom", to_string(mlq::label_arrangement(a))}};
        return out;
      };
    });
    auto* tot = mlq_cmd->add_subcommand("total", "number of MLQs of a type");
    tot->add_option("--m", q.m)->required();
    tot->add_option("--N", q.N)->required();
    tot->callback([&] {
      action = [&] {
        Output out;
        out.json = Json{{"total", mlq::mlq_total(type_from(q.m, q.N)).get_str()}};
        return out;
      };
    });
  }

  // ---- count ----
  auto* count_cmd = app.add_subcommand("count", "MLQ counts by bottom row");
  count_cmd->require_subcommand(1);
  struct {
    std::string b;
    int N = 0;
    int k = 1;
    std::string kvec;
    std::string perm;
    std::string m;
  } c;
  {
    auto* w0 = count_cmd->add_subcommand("w0", "G_w0 by determinant and product");
    w0->add_option("--b", c.b, "positions, 0-based increasing")->required();
    w0->add_option("--N", c.N)->required();
    w0->callback([&] {
      action = [&] {
        const auto pos = positions(c.b, c.N);
        Output out;
        out.json = Json{{"b", pos.b},
                        {"N", pos.N},
                        {"det", count::G_w0_det(pos).get_str()},
                        {"product", count::G_w0_product(pos).get_str()},
                        {"lgv", count::lgv_count(count::w0_path_family(pos)).get_str()}};
        return out;
      };
    });
    auto* sk = count_cmd->add_subcommand("skw0", "G_{s_k w0} formula");
    sk->add_option("--k", c.k)->required();
    sk->add_option("--b", c.b)->required();
    sk->add_option("--N", c.N)->required();
    sk->callback([&] {
      action = [&] {
        const auto pos = positions(c.b, c.N);
        Output out;
        out.json = Json{{"k", c.k}, {"b", pos.b}, {"N", pos.N}, {"formula", count::G_skw0_formula(c.k, pos).get_str()}};
        return out;
      };
    });
    auto* sS = count_cmd->add_subcommand("sw0", "signed sum formula for s_{k1}...s_{kr} w0");
    sS->add_option("--kvec", c.kvec, "e.g. 3,1")->required();
    sS->add_option("--b", c.b)->required();
    sS->add_option("--N", c.N)->required();
    sS->callback([&] {
      action = [&] {
        const auto pos = positions(c.b, c.N);
        const auto kvec = parse_int_list(c.kvec);
        Output out;
        out.json = Json{{"k", kvec},
                        {"perm", to_string(count::reflected_w0(kvec, pos.size()))},
                        {"b", pos.b},
                        {"N", pos.N},
                        {"formula", count::G_Sw0_formula(kvec, pos).get_str()}};
        return out;
      };
    });
    auto* br = count_cmd->add_subcommand("brute", "G_pi by enumeration");
    br->add_option("--perm", c.perm)->required();
    br->add_option("--b", c.b)->required();
    br->add_option("--N", c.N)->required();
    br->callback([&] {
      action = [&] {
        const auto pos = positions(c.b, c.N);
        Output out;
        out.json = Json{{"perm", c.perm},
                        {"b", pos.b},
                        {"N", pos.N},
                        {"count", count::G_pi_brute(parse_permutation(c.perm), pos).get_str()}};
        return out;
      };
    });
    auto* bc = count_cmd->add_subcommand("bottom", "MLQ counts for every bottom row of a type");
    bc->add_option("--m", c.m)->required();
    bc->add_option("--N", c.N)->required();
    bc->callback([&] {
      action = [&] {
        const auto counts = count::bottom_counts(type_from(c.m, c.N), g.jobs);
        Output out;
        Json map = Json::object();
        std::string csv = "word,count\n";
        for (const auto& [w, n] : counts) {
          map[to_string(w)] = n.get_str();
          csv += "\"" + to_string(w) + "\"," + n.get_str() + "\n";
        }
        out.json = Json{{"m", parse_int_list(c.m)}, {"N", c.N}, {"counts", map}};
        out.csv = csv;
        return out;
      };
    });
  }

  // ---- continuum ----
  auto* cont_cmd = app.add_subcommand("continuum", "continuous multiline queues");
  cont_cmd->require_subcommand(1);
  struct {
    int n = 3;
    std::string perm;
    bool mc = false;
    long samples = 1000000;
    std::string target, op, base;
  } ct;
  {
    auto* p = cont_cmd->add_subcommand("p", "exact permutation probabilities");
    p->add_option("--n", ct.n)->required();
    p->callback([&] {
      action = [&] {
        const auto d = continuum::p_exact(ct.n, g.jobs);
        Output out;
        out.json = emit::to_json(d);
        out.csv = emit::perm_dist_csv(d);
        return out;
      };
    });
    auto* gp = cont_cmd->add_subcommand("g", "density polynomial g_pi in q_1..q_n");
    gp->add_option("--perm", ct.perm)->required();
    gp->callback([&] {
      action = [&] {
        const auto pi = parse_permutation(ct.perm);
        const auto poly = continuum::g_poly(pi, g.jobs);
        Output out;
        out.json = Json{{"perm", ct.perm},
                        {"text", poly::to_string(poly)},
                        {"poly", emit::to_json(poly)},
                        {"integral", to_string(poly::integrate_ordered_simplex(poly))},
                        {"harmonic", poly::laplacian(poly).is_zero()}};
        return out;
      };
    });
    auto* co = cont_cmd->add_subcommand("corr", "two-point correlations c_{i,j}");
    co->add_option("--n", ct.n)->required();
    co->add_flag("--mc", ct.mc, "Monte Carlo instead of the exact census");
    co->add_option("--samples", ct.samples)->capture_default_str();
    co->callback([&] {
      action = [&] {
        Output out;
        if (ct.mc) {
          const auto e = continuum::correlations_mc(ct.n, ct.samples, g.seed, g.jobs);
          out.json = emit::to_json(e);
          out.csv = emit::corr_estimate_csv(e);
        } else {
          const auto e = continuum::correlations_exact(ct.n, g.jobs);
          out.json = emit::to_json(e);
          out.csv = emit::corr_table_csv(e);
        }
        return out;
      };
    });
    auto* h = cont_cmd->add_subcommand("harmonic", "harmonicity of g over rotation classes");
    h->add_option("--n", ct.n)->required();
    h->callback([&] {
      action = [&] {
        Json classes = Json::object();
        int count = 0;
        for (const auto& p : continuum::rotation_class_representatives(ct.n)) {
          const bool ok = continuum::is_harmonic(p, g.jobs);
          count += ok;
          classes[to_string(p)] = ok;
        }
        Output out;
        out.json = Json{{"n", ct.n}, {"harmonic", count}, {"classes", classes}};
        return out;
      };
    });
    auto* op = cont_cmd->add_subcommand("op", "check g_target = op g_base");
    op->add_option("--target", ct.target)->required();
    op->add_option("--op", ct.op, "e.g. \"1/2*d3d4 - 1\"")->required();
    op->add_option("--base", ct.base)->required();
    op->callback([&] {
      action = [&] {
        const auto r = continuum::check_operator_identity(parse_permutation(ct.target), poly::parse_operator(ct.op),
                                                          parse_permutation(ct.base));
        Output out;
        out.json = Json{{"target", ct.target},
                        {"op", poly::to_string(poly::parse_operator(ct.op))},
                        {"base", ct.base},
                        {"equal", r.equal}};
        if (!r.equal) out.json["difference"] = poly::to_string(r.expected - r.actual);
        return out;
      };
    });
  }

  // ---- poly ----
  auto* poly_cmd = app.add_subcommand("poly", "polynomial utilities");
  poly_cmd->require_subcommand(1);
  struct {
    int n = 3;
    std::string op;
    std::string perm;
  } pc;
  {
    auto* v = poly_cmd->add_subcommand("vandermonde", "prod_{k<l} (q_l - q_k)");
    v->add_option("--n", pc.n)->required();
    v->callback([&] {
      action = [&] {
        const auto p = poly::vandermonde(pc.n);
        Output out;
        out.json = Json{{"text", poly::to_string(p)}, {"poly", emit::to_json(p)},
                        {"laplacian_zero", poly::laplacian(p).is_zero()}};
        return out;
      };
    });
    auto* a = poly_cmd->add_subcommand("apply", "apply a differential operator to g_perm");
    a->add_option("--op", pc.op)->required();
    a->add_option("--perm", pc.perm)->required();
    a->callback([&] {
      action = [&] {
        const auto r = poly::apply_operator(poly::parse_operator(pc.op), continuum::g_poly(parse_permutation(pc.perm)));
        Output out;
        out.json = Json{{"text", poly::to_string(r)}, {"poly", emit::to_json(r)}};
        return out;
      };
    });
  }

  // ---- tab ----
  auto* tab_cmd = app.add_subcommand("tab", "tableaux");
  tab_cmd->require_subcommand(1);
  struct {
    std::string shape;
    int t = 1;
    std::string route = "all";
    std::string m;
    int N = 0;
    std::string x;
    int n = 3;
  } tb;
  {
    auto* sc = tab_cmd->add_subcommand("ssyt-count", "number of SSYT with entries in [t]");
    sc->add_option("--shape", tb.shape)->required();
    sc->add_option("--t", tb.t)->required();
    sc->add_option("--route", tb.route)->check(CLI::IsMember({"all", "hook", "jt", "brute"}))->capture_default_str();
    sc->callback([&] {
      action = [&] {
        const tab::Partition lam(parse_int_list(tb.shape));
        Integer v;
        if (tb.route == "hook") v = tab::ssyt_count_hook_content(lam, tb.t);
        else if (tb.route == "jt") v = tab::ssyt_count_jacobi_trudi(lam, tb.t);
        else if (tb.route == "brute") v = tab::ssyt_count_brute(lam, tb.t);
        else v = tab::ssyt_count(lam, tb.t);
        Output out;
        out.json = Json{{"shape", lam.parts()}, {"t", tb.t}, {"route", tb.route}, {"count", v.get_str()}};
        return out;
      };
    });
    auto* fw = tab_cmd->add_subcommand("fw", "MLQs whose bottom row starts n (n-1) ... 2");
    fw->add_option("--m", tb.m, "class counts; vacancies complete the ring")->required();
    fw->add_option("--N", tb.N)->required();
    fw->callback([&] {
      action = [&] {
        std::vector<int> m = parse_int_list(tb.m);
        int sum = 0;
        for (int x : m) sum += x;
        if (sum < tb.N) m.push_back(tb.N - sum);
        const auto f = tab::F_w_count(TypeVector(m, tb.N));
        Output out;
        out.json = Json{{"m", m},
                        {"N", tb.N},
                        {"t", f.t},
                        {"shape_conjugate", f.shape.conjugate().parts()},
                        {"route_sum", f.route_sum.get_str()},
                        {"route_tableau", f.route_tableau.get_str()},
                        {"route_product", f.route_product.get_str()},
                        {"agree", f.agree()}};
        return out;
      };
    });
    auto* pr = tab_cmd->add_subcommand("prefix", "probability of an initial decreasing word");
    pr->add_option("--x", tb.x, "x_n,...,x_2 decreasing")->required();
    pr->add_option("--N", tb.N)->required();
    pr->callback([&] {
      action = [&] {
        const auto xs = parse_int_list(tb.x);
        Output out;
        out.json = Json{{"x", xs}, {"N", tb.N}, {"formula", to_string(tab::f_pi_initial(xs, tb.N))}};
        if (tb.N <= 7) out.json["exact"] = to_string(tab::prefix_probability(xs, tb.N));
        return out;
      };
    });
    auto* gt = tab_cmd->add_subcommand("gt", "Gelfand-Tsetlin pattern count");
    gt->add_option("--n", tb.n)->required();
    gt->callback([&] {
      action = [&] {
        const auto r = tab::gt_pattern_count(tb.n);
        Output out;
        out.json = Json{{"n", tb.n}, {"brute", r.brute.get_str()}, {"formula", r.formula.get_str()}};
        return out;
      };
    });
    auto* bij = tab_cmd->add_subcommand("bijection", "MLQ to SSYT for an MLQ given by rows");
    bij->add_option("--m", tb.m)->required();
    bij->add_option("--N", tb.N)->required();
    bij->add_option("--rows", tb.shape, "rows top first, e.g. \"5,8;3,4,7,11\"")->required();
    bij->callback([&] {
      action = [&] {
        const auto l = mlq::label_mlq(mlq::DiscreteMLQ(type_from(tb.m, tb.N), parse_rows(tb.shape)));
        Output out;
        out.json = Json{{"bottom", to_string(mlq::bottom_word(l))}, {"tableau", emit::to_json(tab::mlq_to_ssyt(l))}};
        return out;
      };
    });
  }

  // ---- rs ----
  auto* rs_cmd = app.add_subcommand("rs", "linking patterns and the k-RS chain");
  rs_cmd->require_subcommand(1);
  struct {
    int n = 2;
    int k = 1;
    std::string pattern;
    std::string subset;
  } r;
  {
    auto* st = rs_cmd->add_subcommand("stationary", "exact stationary law of the k-RS chain");
    st->add_option("--n", r.n)->required();
    st->add_option("--k", r.k)->required();
    st->callback([&] {
      action = [&] {
        const auto s = rs::rs_stationary(r.n, r.k);
        Output out;
        out.json = emit::to_json(s);
        out.csv = emit::rs_stationary_csv(s);
        return out;
      };
    });
    auto* ps = rs_cmd->add_subcommand("patterns", "all linking patterns on [2n]");
    ps->add_option("--n", r.n)->required();
    ps->callback([&] {
      action = [&] {
        Json list = Json::array();
        std::string csv = "pattern,nesting\n";
        for (const auto& p : rs::enumerate_patterns(r.n)) {
          list.push_back(rs::to_string(p));
          csv += rs::to_string(p) + "," + std::to_string(p.nesting()) + "\n";
        }
        Output out;
        out.json = Json{{"n", r.n}, {"patterns", list}};
        out.csv = csv;
        return out;
      };
    });
    auto* ap = rs_cmd->add_subcommand("apply", "apply e_S (or a single e_i) to a pattern");
    ap->add_option("--pattern", r.pattern, "e.g. \"(1,4)(2,3)(5,6)\"")->required();
    ap->add_option("--S", r.subset, "generator indices, e.g. 4 or 1,4,7,8")->required();
    ap->callback([&] {
      action = [&] {
        const auto l = rs::parse_pattern(r.pattern);
        const auto s = parse_int_list(r.subset);
        Output out;
        out.json = Json{{"pattern", rs::to_string(l)},
                        {"S", s},
                        {"order", rs::firing_order(l.n(), s)},
                        {"result", rs::to_string(rs::apply_eS(l, s))}};
        return out;
      };
    });
  }

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "run verification checks");
  struct {
    std::string filter = "*";
    bool include_long = false;
    bool list = false;
    long samples = 10'000'000;
  } v;
  verify_cmd->add_option("filter", v.filter, "comma-separated id globs")->capture_default_str();
  verify_cmd->add_flag("--long", v.include_long, "include long-running checks");
  verify_cmd->add_flag("--list", v.list, "list check ids");
  verify_cmd->add_option("--mc-samples", v.samples, "samples for the Monte Carlo check")->capture_default_str();
  verify_cmd->callback([&] {
    cacheable = false;
    action = [&] {
      Output out;
      if (v.list) {
        out.json = Json::array();
        std::string csv = "id,severity,long,title\n";
        for (const auto& d : suite::registry()) {
          out.json.push_back(Json{{"id", d.id}, {"severity", suite::to_string(d.severity)},
                                  {"long", d.long_running}, {"title", d.title}});
          csv += d.id + "," + suite::to_string(d.severity) + "," + (d.long_running ? "1" : "0") + ",\"" + d.title +
                 "\"\n";
        }
        out.csv = csv;
        return out;
      }
      suite::RunOptions o;
      o.jobs = g.jobs;
      o.seed = g.seed;
      o.include_long = v.include_long;
      o.mc_samples = v.samples;
      std::vector<suite::VerificationReport> reports;
      try {
        reports = suite::run_suite(v.filter, o);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      out.json = Json::array();
      for (const auto& rep : reports) {
        out.json.push_back(suite::to_json(rep));
        if (rep.status == suite::Status::kMismatch) {
          std::cerr << "MISMATCH [" << suite::to_string(rep.severity) << "] " << rep.id << ": " << rep.mismatches
                    << " of " << rep.checked << "\n";
          for (const auto& w : rep.witnesses) std::cerr << "    " << w << "\n";
        }
      }
      out.csv = reports_csv(reports);
      out.exit_code = suite::exit_code(reports);
      return out;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  if (!action) return 1;

  try {
    if (g.jobs < 1) g.jobs = default_jobs();
    const bool csv = g.format == "csv";
    auto render = [&]() -> std::pair<std::string, int> {
      Output out = action();
      if (csv) {
        if (!out.csv) throw UsageError("csv output is not available for this command");
        return {*out.csv, out.exit_code};
      }
      return {out.json.dump(2) + "\n", out.exit_code};
    };
    std::string text;
    int rc = 0;
    if (!g.cache_dir.empty() && cacheable) {
      // the key covers every argument except the cache location and thread count
      std::string params;
      for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--cache-dir" || a == "--jobs") {
          ++i;
          continue;
        }
        if (a.rfind("--cache-dir=", 0) == 0 || a.rfind("--jobs=", 0) == 0) continue;
        params += a + '\x1e';
      }
      cache::ResultCache cache(g.cache_dir, 0.05, g.seed);
      text = cache.get_or_compute("tasepkit", params, [&] { return render().first; });
      const auto st = cache.stats();
      if (st.audit_failures > 0) std::cerr << "cache audit found a stale entry; recomputed\n";
    } else {
      std::tie(text, rc) = render();
    }
    std::cout << text;
    return rc;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
