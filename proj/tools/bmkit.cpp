#include <atomic>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "bmkit/bmcycles.hpp"
#include "bmkit/errors.hpp"
#include "bmkit/json_io.hpp"
#include "bmkit/moduli.hpp"
#include "bmkit/partitions.hpp"
#include "bmkit/quasibanal.hpp"
#include "bmkit/symrep.hpp"
#include "bmkit/types.hpp"

namespace {

using namespace bmkit;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

unsigned long parse_number(const std::string& s, const char* what) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    throw argument_error(std::string(what) + ": '" + s + "' is not a number");
  }
  if (used != s.size()) throw argument_error(std::string(what) + ": '" + s + "' is not a number");
  return v;
}

Partition parse_partition(const std::string& s) {
  if (s.empty()) return Partition();
  std::vector<unsigned> parts;
  for (const std::string& item : split(s, ','))
    parts.push_back(static_cast<unsigned>(parse_number(item, "partition part")));
  return Partition(std::move(parts));
}

std::vector<Partition> parse_partition_list(const std::string& s) {
  std::vector<Partition> out;
  for (const std::string& item : split(s, ';')) out.push_back(parse_partition(item));
  return out;
}

// "a:2,1;b:1" with string labels; a single bare partition means the plain
// unipotent letter "1".
InertialType parse_inertial_type(const std::string& s) {
  std::vector<std::string> items = split(s, ';');
  if (items.size() == 1 && items[0].find(':') == std::string::npos)
    return unipotent_type(parse_partition(items[0]));
  std::vector<InertialType::Entry> entries;
  for (const std::string& item : items) {
    std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw argument_error("type entry '" + item + "' is missing its 'label:' prefix");
    entries.emplace_back(BasicType(item.substr(0, colon), 1),
                         parse_partition(item.substr(colon + 1)));
  }
  return InertialType(std::move(entries));
}

// "1:2,1;2:1" with numeric character indices; a single bare partition sits on
// index 1.
TypeSequence parse_type_sequence(const std::string& s) {
  std::vector<std::string> items = split(s, ';');
  if (items.size() == 1 && items[0].find(':') == std::string::npos)
    return unipotent_sequence(parse_partition(items[0]));
  std::vector<TypeSequence::Entry> entries;
  for (const std::string& item : items) {
    std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw argument_error("type entry '" + item + "' is missing its 'index:' prefix");
    entries.emplace_back(static_cast<unsigned>(parse_number(item.substr(0, colon), "index")),
                         parse_partition(item.substr(colon + 1)));
  }
  return TypeSequence(std::move(entries));
}

std::string partition_str(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::string sequence_str(const TypeSequence& t) {
  std::string out;
  for (std::size_t i = 0; i < t.entries().size(); ++i) {
    if (i) out += ';';
    out += std::to_string(t.entries()[i].first) + ':' + partition_str(t.entries()[i].second);
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct Output {
  std::string format = "text";
  bool is_json() const { return format == "json"; }
  bool is_csv() const { return format == "csv"; }
};

void emit_scalar(const Output& out, const Json& record, const Int& value) {
  if (out.is_json())
    std::cout << record.dump() << "\n";
  else if (out.is_csv())
    std::cout << "value\n" << value.get_str() << "\n";
  else
    std::cout << value.get_str() << "\n";
}

void emit_matrix(const Output& out, const std::vector<std::string>& labels,
                 const std::vector<std::vector<Int>>& entries, const Json& record) {
  if (out.is_json()) {
    std::cout << record.dump() << "\n";
    return;
  }
  if (out.is_csv()) {
    std::cout << "order";
    for (const std::string& l : labels) std::cout << ',' << csv_quote(l);
    std::cout << "\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      std::cout << csv_quote(labels[i]);
      for (const Int& e : entries[i]) std::cout << ',' << e.get_str();
      std::cout << "\n";
    }
    return;
  }
  std::cout << "order:";
  for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? " | " : " ") << labels[i];
  std::cout << "\n";
  for (const auto& row : entries) {
    for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j].get_str();
    std::cout << "\n";
  }
}

template <typename Sum>
void emit_sum(const Output& out, const Sum& sum, const Json& record) {
  if (out.is_json()) {
    std::cout << record.dump() << "\n";
  } else if (out.is_csv()) {
    std::cout << "label,coefficient\n";
    for (const Json& term : to_json(sum))
      std::cout << csv_quote(term["label"].template get<std::string>()) << ','
                << term["coefficient"].template get<std::string>() << "\n";
  } else {
    std::cout << render(sum) << "\n";
  }
}

// Runs one job per index with a fixed stride so the partition of work depends
// only on the job count, then emits the buffered lines in index order.
bool run_sweep(std::size_t count, unsigned jobs, const std::function<std::pair<std::string, bool>(std::size_t)>& one) {
  if (jobs == 0) throw argument_error("--jobs must be positive");
  std::vector<std::string> lines(count);
  std::atomic<bool> all_ok{true};
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      auto [line, ok] = one(i);
      lines[i] = std::move(line);
      if (!ok) all_ok = false;
    }
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += jobs) {
            auto [line, ok] = one(i);
            lines[i] = std::move(line);
            if (!ok) all_ok = false;
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }
  for (const std::string& line : lines) std::cout << line << "\n";
  return all_ok;
}

unsigned required_degree(const std::optional<unsigned>& flag_n, unsigned derived,
                         const char* what) {
  if (flag_n && *flag_n != derived)
    throw argument_error(std::string(what) + ": --n disagrees with the type degree");
  return derived;
}

QuasiBanalParams resolve_params(std::optional<unsigned long> l, std::optional<unsigned long> q,
                                unsigned n) {
  if (l.has_value() != q.has_value())
    throw argument_error("provide both --l and --q, or neither");
  if (l) return QuasiBanalParams(*l, *q, n);
  return default_params(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Breuil-Mezard combinatorics"};
  app.require_subcommand(1);

  Output out;
  std::optional<unsigned> max_degree;
  unsigned jobs = 1;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--max-degree", max_degree, "resource bound on partition degree");
  app.add_option("--jobs", jobs, "sweep parallelism");

  std::optional<unsigned> arg_n;
  std::optional<unsigned long> arg_q, arg_l;
  std::string arg_shape, arg_content, arg_type, arg_Q;
  bool sweep = false;

  auto add = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  CLI::App* c_kostka = add("kostka", "Kostka number of --shape and --content, or the oracle sweep");
  c_kostka->add_option("--shape", arg_shape, "shape partition");
  c_kostka->add_option("--content", arg_content, "content partition");
  c_kostka->add_option("--n", arg_n, "sweep degree bound");
  c_kostka->add_flag("--sweep", sweep, "compare both engines on all pairs of degree <= n");

  CLI::App* c_kmatrix = add("kostka-matrix", "full Kostka matrix at degree n");
  c_kmatrix->add_option("--n", arg_n, "degree")->required();

  CLI::App* c_ikmatrix = add("inverse-kostka", "exact inverse of the Kostka matrix at degree n");
  c_ikmatrix->add_option("--n", arg_n, "degree")->required();

  CLI::App* c_char = add("char", "symmetric group character of --shape at --content");
  c_char->add_option("--shape", arg_shape, "shape partition")->required();
  c_char->add_option("--content", arg_content, "cycle type")->required();

  CLI::App* c_lr = add("lr", "iterated Littlewood-Richardson multiplicity");
  c_lr->add_option("--shape", arg_shape, "target partition")->required();
  c_lr->add_option("--type", arg_type, "factor partitions, e.g. '2,1;1;1'")->required();

  CLI::App* c_mmatrix = add("mult-matrix", "multiplicity matrix of an scs fiber");
  c_mmatrix->add_option("--n", arg_n, "unipotent fiber degree");
  c_mmatrix->add_option("--type", arg_type, "any type in the fiber");

  CLI::App* c_cyc = add("cyc", "cycle of the K-type of --type");
  c_cyc->add_option("--type", arg_type, "inertial type")->required();
  c_cyc->add_option("--n", arg_n, "expected degree");

  CLI::App* c_rtau = add("r-tau", "virtual representation with cycle Z(tau)");
  c_rtau->add_option("--type", arg_type, "inertial type")->required();
  c_rtau->add_option("--n", arg_n, "expected degree");

  CLI::App* c_bip = add("bip", "margin matrices of (--shape, --content), or the weight count of --type");
  c_bip->add_option("--shape", arg_shape, "row margins");
  c_bip->add_option("--content", arg_content, "column margins")->required();
  c_bip->add_option("--type", arg_type, "weight partitions, e.g. '2,1;1'");

  CLI::App* c_mackey = add("mackey", "restriction multiplicities by weight sequence");
  c_mackey->add_option("--shape", arg_shape, "row margins")->required();
  c_mackey->add_option("--content", arg_content, "column margins")->required();

  CLI::App* c_cdist = add("cycle-distinguished", "cycle of --type at the distinguished point --Q");
  c_cdist->add_option("--type", arg_type, "type sequence")->required();
  c_cdist->add_option("--Q", arg_Q, "eigenspace partition")->required();
  c_cdist->add_option("--n", arg_n, "expected degree");
  c_cdist->add_option("--l", arg_l, "residue characteristic");
  c_cdist->add_option("--q", arg_q, "residue field size");

  CLI::App* c_red = add("red", "reduction of the K-type of --type, optionally paired with --Q");
  c_red->add_option("--type", arg_type, "type sequence")->required();
  c_red->add_option("--Q", arg_Q, "eigenspace partition for the cycle map");

  CLI::App* c_verify = add("verify-local-bm", "check the local multiplicity identity");
  c_verify->add_option("--type", arg_type, "type sequence");
  c_verify->add_option("--Q", arg_Q, "eigenspace partition");
  c_verify->add_option("--n", arg_n, "degree");
  c_verify->add_option("--l", arg_l, "residue characteristic");
  c_verify->add_option("--q", arg_q, "residue field size");
  c_verify->add_flag("--sweep", sweep, "all type sequences and all Q at degree n");

  CLI::App* c_ihara = add("ihara", "principal-series reduction and cycle comparison");
  c_ihara->add_option("--n", arg_n, "degree")->required();
  c_ihara->add_option("--l", arg_l, "residue characteristic");
  c_ihara->add_option("--q", arg_q, "residue field size");

  CLI::App* c_comp = add("components", "irreducible components of the matrix-pair moduli");
  c_comp->add_option("--n", arg_n, "matrix size")->required();
  c_comp->add_option("--q", arg_q, "Frobenius twist");
  c_comp->add_option("--l", arg_l, "residue characteristic");
  c_comp->add_flag("--sweep", sweep, "compare against the orbit-scan oracle on small n, q");

  CLI::App* c_orbits = add("orbits", "Frobenius orbits on the eigenvalue lattice");
  c_orbits->add_option("--n", arg_n, "matrix size")->required();
  c_orbits->add_option("--q", arg_q, "Frobenius twist")->required();
  c_orbits->add_option("--l", arg_l, "residue characteristic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (max_degree) limits::set_max_degree(*max_degree);

    if (c_kostka->parsed()) {
      if (sweep) {
        if (!arg_n) throw argument_error("kostka --sweep needs --n");
        std::vector<std::pair<const Partition*, const Partition*>> cases;
        for (unsigned d = 0; d <= *arg_n; ++d)
          for (const Partition& p : partitions_of(d))
            for (const Partition& q : partitions_of(d)) cases.emplace_back(&p, &q);
        bool ok = run_sweep(cases.size(), jobs, [&](std::size_t i) {
          const auto& [p, q] = cases[i];
          Int main_value = kostka(*p, *q);
          Int oracle = kostka_oracle(*p, *q);
          Json j{{"degree", p->degree()},       {"shape", to_json(*p)},
                 {"content", to_json(*q)},      {"kostka", big(main_value)},
                 {"oracle", big(oracle)},       {"ok", main_value == oracle}};
          return std::make_pair(j.dump(), main_value == oracle);
        });
        return ok ? 0 : 1;
      }
      if (arg_shape.empty() || arg_content.empty())
        throw argument_error("kostka needs --shape and --content");
      Partition p = parse_partition(arg_shape), q = parse_partition(arg_content);
      Int v = kostka(p, q);
      emit_scalar(out, Json{{"shape", to_json(p)}, {"content", to_json(q)}, {"value", big(v)}}, v);
      return 0;
    }

    if (c_kmatrix->parsed() || c_ikmatrix->parsed()) {
      PartitionMatrix m =
          c_kmatrix->parsed() ? kostka_matrix(*arg_n) : inverse_kostka_matrix(*arg_n);
      std::vector<std::string> labels;
      for (const Partition& p : m.order) labels.push_back(partition_str(p));
      emit_matrix(out, labels, m.entries, to_json(m));
      return 0;
    }

    if (c_char->parsed()) {
      Partition shape = parse_partition(arg_shape), mu = parse_partition(arg_content);
      Int v = character(shape, mu);
      // Conjugation self-check: the conjugate shape twists by the sign.
      if (character(conjugate(shape), mu) != cycle_type_sign(mu) * v)
        throw std::logic_error("character conjugation self-check failed");
      emit_scalar(out, Json{{"shape", to_json(shape)}, {"cycle_type", to_json(mu)}, {"value", big(v)}}, v);
      return 0;
    }

    if (c_lr->parsed()) {
      Partition target = parse_partition(arg_shape);
      std::vector<Partition> factors = parse_partition_list(arg_type);
      Int v = lr_mult(target, factors);
      Json jf = Json::array();
      for (const Partition& f : factors) jf.push_back(to_json(f));
      emit_scalar(out, Json{{"target", to_json(target)}, {"factors", std::move(jf)}, {"value", big(v)}}, v);
      return 0;
    }

    if (c_mmatrix->parsed()) {
      ScsMap s;
      if (arg_n && !arg_type.empty())
        throw argument_error("mult-matrix takes --n or --type, not both");
      if (arg_n)
        s = scs(unipotent_type(Partition({*arg_n})));
      else if (!arg_type.empty())
        s = scs(parse_inertial_type(arg_type));
      else
        throw argument_error("mult-matrix needs --n or --type");
      std::vector<InertialType> fiber = types_with_scs(s);
      std::vector<std::string> labels;
      for (const InertialType& t : fiber) labels.push_back(type_name(t));
      std::vector<std::vector<Int>> entries(fiber.size(), std::vector<Int>(fiber.size()));
      for (std::size_t i = 0; i < fiber.size(); ++i)
        for (std::size_t j = 0; j < fiber.size(); ++j) entries[i][j] = mult(fiber[i], fiber[j]);
      Json jorder = Json::array();
      for (const std::string& l : labels) jorder.push_back(l);
      Json jentries = Json::array();
      for (const auto& row : entries) {
        Json jrow = Json::array();
        for (const Int& e : row) jrow.push_back(big(e));
        jentries.push_back(std::move(jrow));
      }
      emit_matrix(out, labels, entries,
                  Json{{"order", std::move(jorder)}, {"entries", std::move(jentries)}});
      return 0;
    }

    if (c_cyc->parsed() || c_rtau->parsed()) {
      InertialType tau = parse_inertial_type(arg_type);
      required_degree(arg_n, type_degree(tau), c_cyc->parsed() ? "cyc" : "r-tau");
      if (c_cyc->parsed()) {
        Cycle z = cyc(sigma(tau));
        emit_sum(out, z, Json{{"type", to_json(tau)}, {"cycle", to_json(z)}});
      } else {
        VirtualRep r = r_tau(tau);
        emit_sum(out, r, Json{{"type", to_json(tau)}, {"rep", to_json(r)}});
      }
      return 0;
    }

    if (c_bip->parsed()) {
      Partition q = parse_partition(arg_content);
      if (!arg_type.empty() && !arg_shape.empty())
        throw argument_error("bip takes --shape or --type, not both");
      if (!arg_type.empty()) {
        std::vector<Partition> weights = parse_partition_list(arg_type);
        Int v = bip_count(weights, q);
        Json jw = Json::array();
        for (const Partition& w : weights) jw.push_back(to_json(w));
        emit_scalar(out, Json{{"weights", std::move(jw)}, {"content", to_json(q)}, {"count", big(v)}}, v);
        return 0;
      }
      if (arg_shape.empty()) throw argument_error("bip needs --shape or --type");
      Partition p = parse_partition(arg_shape);
      std::vector<MarginMatrix> ms = bipartitions(p, q);
      if (out.is_json()) {
        Json jm = Json::array();
        for (const MarginMatrix& m : ms) jm.push_back(to_json(m));
        std::cout << Json{{"shape", to_json(p)},
                          {"content", to_json(q)},
                          {"count", ms.size()},
                          {"matrices", std::move(jm)}}
                         .dump()
                  << "\n";
      } else if (out.is_csv()) {
        std::cout << "count\n" << ms.size() << "\n";
      } else {
        std::cout << ms.size() << "\n";
      }
      return 0;
    }

    if (c_mackey->parsed()) {
      Partition p = parse_partition(arg_shape), q = parse_partition(arg_content);
      auto decomposition = mackey_decomposition(p, q);
      if (out.is_json()) {
        std::cout << mackey_json(p, q, decomposition).dump() << "\n";
      } else if (out.is_csv()) {
        std::cout << "weights,count\n";
        for (const auto& [w, count] : decomposition) {
          std::string ws;
          for (std::size_t i = 0; i < w.size(); ++i) ws += (i ? ";" : "") + partition_str(w[i]);
          std::cout << csv_quote(ws) << ',' << count.get_str() << "\n";
        }
      } else {
        for (const auto& [w, count] : decomposition) {
          for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? ";" : "") << partition_str(w[i]);
          std::cout << " -> " << count.get_str() << "\n";
        }
      }
      return 0;
    }

    if (c_cdist->parsed()) {
      TypeSequence tau = parse_type_sequence(arg_type);
      unsigned n = required_degree(arg_n, tau.degree(), "cycle-distinguished");
      QuasiBanalParams params = resolve_params(arg_l, arg_q, n);
      DistinguishedPoint d(parse_partition(arg_Q));
      Cycle z = cycle_at_distinguished(tau, d, params);
      emit_sum(out, z, Json{{"tau", to_json(tau)}, {"Q", to_json(d.Q)}, {"cycle", to_json(z)}});
      return 0;
    }

    if (c_red->parsed()) {
      TypeSequence tau = parse_type_sequence(arg_type);
      VirtualRep rep = red_rep(tau);
      if (arg_Q.empty()) {
        emit_sum(out, rep, Json{{"tau", to_json(tau)}, {"rep", to_json(rep)}});
        return 0;
      }
      DistinguishedPoint d(parse_partition(arg_Q));
      Cycle z = bar_cyc_at(rep, d);
      if (out.is_json()) {
        std::cout << Json{{"tau", to_json(tau)},
                          {"rep", to_json(rep)},
                          {"Q", to_json(d.Q)},
                          {"cycle", to_json(z)}}
                         .dump()
                  << "\n";
      } else if (out.is_csv()) {
        emit_sum(out, z, Json());
      } else {
        std::cout << render(rep) << "\n" << render(z) << "\n";
      }
      return 0;
    }

    if (c_verify->parsed()) {
      if (sweep) {
        if (!arg_n) throw argument_error("verify-local-bm --sweep needs --n");
        unsigned n = *arg_n;
        QuasiBanalParams params = resolve_params(arg_l, arg_q, n);
        std::vector<TypeSequence> taus = type_sequences_with_degree(n, n);
        const std::vector<Partition>& qs = partitions_of(n);
        bool ok = run_sweep(taus.size() * qs.size(), jobs, [&](std::size_t i) {
          const TypeSequence& tau = taus[i / qs.size()];
          DistinguishedPoint d(qs[i % qs.size()]);
          VerifyRecord record = verify_local_bm(tau, d, params);
          return std::make_pair(to_json(record).dump(), record.ok);
        });
        return ok ? 0 : 1;
      }
      if (arg_type.empty() || arg_Q.empty())
        throw argument_error("verify-local-bm needs --type and --Q (or --sweep)");
      TypeSequence tau = parse_type_sequence(arg_type);
      unsigned n = required_degree(arg_n, tau.degree(), "verify-local-bm");
      QuasiBanalParams params = resolve_params(arg_l, arg_q, n);
      VerifyRecord record = verify_local_bm(tau, DistinguishedPoint(parse_partition(arg_Q)), params);
      if (out.is_json())
        std::cout << to_json(record).dump() << "\n";
      else if (out.is_csv())
        std::cout << "n,Q,tau,lhs,rhs,ok\n"
                  << record.n << ',' << csv_quote(partition_str(record.Q)) << ','
                  << csv_quote(sequence_str(record.tau)) << ',' << record.lhs.get_str() << ','
                  << record.rhs.get_str() << ',' << (record.ok ? "true" : "false") << "\n";
      else
        std::cout << "lhs=" << record.lhs.get_str() << " rhs=" << record.rhs.get_str()
                  << " ok=" << (record.ok ? "true" : "false") << "\n";
      return record.ok ? 0 : 1;
    }

    if (c_ihara->parsed()) {
      unsigned n = *arg_n;
      IharaReport report = ihara_report(n, resolve_params(arg_l, arg_q, n));
      if (out.is_json()) {
        std::cout << to_json(report).dump() << "\n";
      } else if (out.is_csv()) {
        std::cout << "kind,label,a,b,c\n";
        for (const auto& [p, c] : report.red_coefficients)
          std::cout << "red," << csv_quote(partition_str(p)) << ',' << c.get_str() << ",,\n";
        for (const IharaCycleCheck& c : report.cycle_checks)
          std::cout << "cycle," << csv_quote(partition_str(c.Q)) << ',' << c.ps_side.get_str()
                    << ',' << c.weighted_sum.get_str() << ',' << c.expected.get_str() << "\n";
      } else {
        for (const auto& [p, c] : report.red_coefficients)
          std::cout << "red " << partition_str(p) << " -> " << c.get_str() << "\n";
        for (const IharaCycleCheck& c : report.cycle_checks)
          std::cout << "cycle " << partition_str(c.Q) << ": " << c.ps_side.get_str() << " "
                    << c.weighted_sum.get_str() << " " << c.expected.get_str() << "\n";
        std::cout << "ok=" << (report.ok ? "true" : "false") << "\n";
      }
      return report.ok ? 0 : 1;
    }

    if (c_comp->parsed()) {
      if (sweep) {
        unsigned cap = std::min(*arg_n, 3u);
        std::vector<std::pair<unsigned, unsigned long>> cases;
        for (unsigned n = 1; n <= cap; ++n)
          for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) cases.emplace_back(n, q);
        bool ok = run_sweep(cases.size(), jobs, [&](std::size_t i) {
          auto [n, q] = cases[i];
          std::size_t count = enumerate_components(n, q).size();
          Int oracle = count_components_oracle(n, q);
          bool match = oracle == Int(count);
          Json j{{"n", n}, {"q", q}, {"count", count}, {"oracle", big(oracle)}, {"ok", match}};
          return std::make_pair(j.dump(), match);
        });
        return ok ? 0 : 1;
      }
      if (!arg_q) throw argument_error("components needs --q");
      std::vector<ComponentDatum> comps = enumerate_components(*arg_n, *arg_q, arg_l);
      Int modulus = component_modulus(*arg_n, *arg_q, arg_l);
      if (out.is_json()) {
        std::cout << components_json(*arg_n, *arg_q, modulus, comps).dump() << "\n";
      } else if (out.is_csv()) {
        std::cout << "component,min_rep,size,partition\n";
        for (std::size_t i = 0; i < comps.size(); ++i)
          for (const auto& [orbit, p] : comps[i].assignment)
            std::cout << i << ',' << orbit.min_rep.get_str() << ',' << orbit.size << ','
                      << csv_quote(partition_str(p)) << "\n";
      } else {
        for (const ComponentDatum& c : comps) {
          for (std::size_t i = 0; i < c.assignment.size(); ++i) {
            const auto& [orbit, p] = c.assignment[i];
            std::cout << (i ? "; " : "") << orbit.min_rep.get_str() << '^' << orbit.size << ':'
                      << partition_str(p);
          }
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (c_orbits->parsed()) {
      Int modulus = component_modulus(*arg_n, *arg_q, arg_l);
      if (!modulus.fits_ulong_p())
        throw resource_error("orbits: modulus exceeds the scan bound");
      std::vector<FrobeniusOrbit> orbits = frobenius_orbits(*arg_q, modulus.get_ui());
      if (out.is_json()) {
        std::cout << orbits_json(*arg_q, modulus, orbits).dump() << "\n";
      } else if (out.is_csv()) {
        std::cout << "min_rep,size\n";
        for (const FrobeniusOrbit& o : orbits)
          std::cout << o.min_rep.get_str() << ',' << o.size << "\n";
      } else {
        for (const FrobeniusOrbit& o : orbits)
          std::cout << o.min_rep.get_str() << ' ' << o.size << "\n";
      }
      return 0;
    }

    throw argument_error("no subcommand selected");
  } catch (const argument_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
