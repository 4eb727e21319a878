#include "aclat/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "aclat/chain_embed.hpp"
#include "aclat/congruence.hpp"
#include "aclat/duality.hpp"
#include "aclat/error.hpp"
#include "aclat/text_format.hpp"

namespace aclat::cli {

namespace {

struct Limits {
  std::size_t max_elements = kDefaultMaxPosetElements;
  std::size_t max_ideals = kDefaultMaxLatticeSize;
};

std::string render(const std::string& format, std::string_view name, const Lattice& l) {
  return format == "dot" ? to_dot(name, l.order()) : format_lattice(name, l);
}

std::string render(const std::string& format, std::string_view name, const Poset& p) {
  return format == "dot" ? to_dot(name, p) : format_poset(name, p);
}

NamedPoset load_poset(const std::string& path) {
  auto obj = load_object(path);
  if (auto* p = std::get_if<NamedPoset>(&obj)) return std::move(*p);
  throw Error(ErrorKind::ParseError, path + " holds a lattice, expected a poset");
}

std::string analyze(const std::string& path) {
  const auto l = load_lattice(path);
  return lattice_report(l.name, l.lattice);
}

std::string dual(const std::string& path, const std::string& format, const Limits& lim) {
  auto obj = load_object(path);
  if (auto* l = std::get_if<NamedLattice>(&obj))
    return render(format, "D(" + l->name + ")", prime_ideals(l->lattice, lim.max_ideals).poset);
  const auto& p = std::get<NamedPoset>(obj);
  return render(format, "E(" + p.name + ")", clopen_downset_lattice(p.poset, lim.max_elements, lim.max_ideals).lattice);
}

std::string roundtrip(const std::string& path, const Limits& lim) {
  std::ostringstream out;
  auto obj = load_object(path);
  if (auto* named = std::get_if<NamedLattice>(&obj)) {
    const Lattice& l = named->lattice;
    const auto w = birkhoff_roundtrip(l, lim.max_ideals);
    out << "roundtrip " << named->name << ": L -> E(D(L))\n";
    out << "|L|: " << l.size() << "\n|D(L)|: " << w.dual.poset.size() << "\n|E(D(L))|: " << w.bidual.lattice.size()
        << "\n";
    for (ElementId a = 0; a < l.size(); ++a) out << l.label(a) << " -> " << w.bidual.lattice.label(w.forward[a]) << "\n";
    out << "checked: " << (w.checked ? "yes" : "no") << "\n";
    return out.str();
  }
  const auto& named = std::get<NamedPoset>(obj);
  const Poset& x = named.poset;
  const auto r = space_roundtrip(x, lim.max_elements);
  out << "roundtrip " << named.name << ": X -> D(E(X))\n";
  out << "|X|: " << x.size() << "\n|E(X)|: " << r.lattice.lattice.size() << "\n|D(E(X))|: " << r.dual.poset.size()
      << "\n";
  for (ElementId p = 0; p < x.size(); ++p) out << x.label(p) << " -> " << r.dual.poset.label(r.forward[p]) << "\n";
  out << "checked: " << (r.checked ? "yes" : "no") << "\n";
  return out.str();
}

std::string space_check(const std::string& path, const Limits& lim) {
  const auto named = load_poset(path);
  const auto v = affine_complete_space(named.poset, lim.max_elements);
  std::string out = "space " + named.name + "\nsize: " + std::to_string(named.poset.size()) + "\n";
  out += std::string("affine-complete: ") + (v.affine_complete ? "yes" : "no") + "\n";
  std::string witness = "none";
  if (!v.affine_complete) {
    witness = "{";
    for (std::size_t i = 0; i < v.witness.size(); ++i) witness += (i ? "," : "") + named.poset.label(v.witness[i]);
    witness += "}";
  }
  return out + "witness: " + witness + "\n";
}

std::string product(const std::string& a, const std::string& b, const std::string& format, const Limits& lim) {
  auto x = load_object(a);
  auto y = load_object(b);
  const std::size_t cap = std::max<std::size_t>(lim.max_ideals, kDefaultMaxProductSize);
  if (auto* l1 = std::get_if<NamedLattice>(&x))
    if (auto* l2 = std::get_if<NamedLattice>(&y))
      return render(format, l1->name + "x" + l2->name, lattice_product(l1->lattice, l2->lattice, cap));
  if (auto* p1 = std::get_if<NamedPoset>(&x))
    if (auto* p2 = std::get_if<NamedPoset>(&y))
      return render(format, p1->name + "x" + p2->name, poset_product(p1->poset, p2->poset, cap));
  throw Error(ErrorKind::ParseError, "product needs two posets or two lattices");
}

std::string freeproduct(const std::string& a, const std::string& b, const std::string& format, const Limits& lim) {
  const auto l1 = load_lattice(a);
  const auto l2 = load_lattice(b);
  const auto f = free_product(l1.lattice, l2.lattice, lim.max_elements);
  const std::string name = l1.name + "*" + l2.name;
  std::string out = render(format, name, f.lattice.lattice);
  if (format == "dot") return out;
  auto injection = [&](const Lattice& l, const std::vector<ElementId>& map, const std::string& label) {
    std::string line = "# " + label + ":";
    for (ElementId e = 0; e < l.size(); ++e) line += " " + l.label(e) + "->" + f.lattice.lattice.label(map[e]);
    return line + "\n";
  };
  return out + injection(l1.lattice, f.inject1, "inject " + l1.name) + injection(l2.lattice, f.inject2, "inject " + l2.name);
}

std::string congruences(const std::string& path) {
  const auto named = load_lattice(path);
  const auto all = all_congruences(named.lattice);
  std::string out = "congruences of " + named.name + ": " + std::to_string(all.size()) + "\n";
  for (const auto& c : all) out += format_congruence(named.lattice, c) + "\n";
  return out;
}

std::string tuple_text(const Lattice& l, const std::vector<ElementId>& args) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? " " : "") + l.label(args[i]);
  return s + ")";
}

std::string check_function(const std::string& lattice_path, const std::string& function_path) {
  const auto named = load_lattice(lattice_path);
  const auto fn = parse_function(read_file(function_path), named);
  const Lattice& l = named.lattice;
  std::string out = "function " + fn.name + " arity=" + std::to_string(fn.function.arity()) + " over " + named.name + "\n";
  const auto compat = is_compatible(l, fn.function);
  out += std::string("compatible: ") + (compat.compatible ? "yes" : "no") + "\n";
  if (compat.counterexample)
    out += "counterexample: congruence " + format_congruence(l, compat.counterexample->congruence) + "; " +
           tuple_text(l, compat.counterexample->lhs) + " vs " + tuple_text(l, compat.counterexample->rhs) + "\n";
  const auto dnf = polynomial_dnf(l, fn.function);
  out += std::string("polynomial: ") + (dnf ? "yes" : "no") + "\n";
  if (dnf)
    for (std::size_t s = 0; s < dnf->coefficients.size(); ++s) {
      std::string subset = "{";
      bool first = true;
      for (std::size_t i = 0; i < dnf->arity; ++i)
        if ((s >> i) & 1U) {
          subset += (first ? "" : ",") + std::to_string(i + 1);
          first = false;
        }
      out += "coefficient " + subset + "} = " + l.label(dnf->coefficients[s]) + "\n";
    }
  return out;
}

std::string witness(const std::string& path) {
  const auto named = load_lattice(path);
  const auto f = compatible_nonpolynomial_witness(named.lattice);
  if (!f) return "witness for " + named.name + ": none\n";
  return "# compatible, not a polynomial\n" + format_function("witness", named.name, named.lattice, *f);
}

std::unique_ptr<ChainOracle> make_oracle(const std::string& spec) {
  if (spec == "dyadic") return dyadic_oracle();
  if (spec == "q01") return q01_oracle();
  if (spec.starts_with("finite:")) {
    std::size_t k = 0;
    const std::string_view digits = std::string_view(spec).substr(7);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && k >= 1) return finite_chain_oracle(k);
  }
  throw Error(ErrorKind::ParseError, "--oracle must be dyadic, q01 or finite:<k>");
}

std::string embed_demo(const std::string& oracle_spec, std::size_t n) {
  const auto oracle = make_oracle(oracle_spec);
  const auto state = embed_q01(*oracle, n);
  std::ostringstream out;
  out << std::left << std::setw(7) << "index" << std::setw(12) << "rational" << "point\n";
  for (const auto& p : state.pairs)
    out << std::setw(7) << (p.index ? std::to_string(*p.index) : "-") << std::setw(12) << p.rational.str()
        << p.point.str() << "\n";
  out << "order-consistent: yes (" << state.pairs_checked << " pairs checked)\n";
  return out.str();
}

std::string export_dot(const std::string& path, const std::string& format) {
  auto obj = load_object(path);
  if (auto* l = std::get_if<NamedLattice>(&obj)) return render(format, l->name, l->lattice);
  const auto& p = std::get<NamedPoset>(obj);
  return render(format, p.name, p.poset);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite distributive lattices, their duals and affine completeness", "aclat"};
  app.require_subcommand(1);
  Limits lim;
  app.add_option("--max-elements", lim.max_elements, "Largest poset for exhaustive down-set enumeration")
      ->capture_default_str();
  app.add_option("--max-ideals", lim.max_ideals, "Largest lattice or down-set family to build")->capture_default_str();

  std::string result;
  std::function<std::string()> action;
  auto formats = CLI::IsMember({"text", "dot"});

  std::string file, file2, format = "text", dot_format = "dot", output, oracle = "dyadic";
  std::size_t count = 0;

  auto* c = app.add_subcommand("analyze", "Size, bounds and the Boolean-interval verdict of a lattice");
  c->add_option("lattice", file)->required();
  c->callback([&] { action = [&] { return analyze(file); }; });

  c = app.add_subcommand("dual", "D(L) of a lattice, or E(X) of a poset");
  c->add_option("file", file)->required();
  c->add_option("--format", format)->check(formats);
  c->callback([&] { action = [&] { return dual(file, format, lim); }; });

  c = app.add_subcommand("roundtrip", "Check L = E(D(L)) or X = D(E(X))");
  c->add_option("file", file)->required();
  c->callback([&] { action = [&] { return roundtrip(file, lim); }; });

  c = app.add_subcommand("space-check", "Affine completeness of a finite Priestley space");
  c->add_option("poset", file)->required();
  c->callback([&] { action = [&] { return space_check(file, lim); }; });

  c = app.add_subcommand("product", "Product of two posets or two lattices");
  c->add_option("first", file)->required();
  c->add_option("second", file2)->required();
  c->add_option("--format", format)->check(formats);
  c->callback([&] { action = [&] { return product(file, file2, format, lim); }; });

  c = app.add_subcommand("freeproduct", "Free product of two lattices via the product of their duals");
  c->add_option("first", file)->required();
  c->add_option("second", file2)->required();
  c->add_option("--format", format)->check(formats);
  c->callback([&] { action = [&] { return freeproduct(file, file2, format, lim); }; });

  c = app.add_subcommand("congruences", "List all congruences of a lattice");
  c->add_option("lattice", file)->required();
  c->callback([&] { action = [&] { return congruences(file); }; });

  c = app.add_subcommand("check-function", "Compatibility and polynomial test for a function table");
  c->add_option("lattice", file)->required();
  c->add_option("function", file2)->required();
  c->callback([&] { action = [&] { return check_function(file, file2); }; });

  c = app.add_subcommand("witness", "A compatible unary function that is not a polynomial");
  c->add_option("lattice", file)->required();
  c->callback([&] { action = [&] { return witness(file); }; });

  c = app.add_subcommand("embed-demo", "Embed the rationals of [0,1] into a bounded chain");
  c->add_option("--oracle", oracle, "dyadic, q01 or finite:<k>")->capture_default_str();
  c->add_option("--n", count, "Number of enumerated rationals to place")->required();
  c->callback([&] { action = [&] { return embed_demo(oracle, count); }; });

  c = app.add_subcommand("export-dot", "Hasse diagram of a poset or lattice");
  c->add_option("file", file)->required();
  c->add_option("--format", dot_format)->check(formats)->capture_default_str();
  c->add_option("--output", output, "Write to this path instead of stdout");
  c->callback([&] { action = [&] { return export_dot(file, dot_format); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ParseError\n" << e.what() << "\n";
    return kParseError;
  }

  try {
    result = action();
    if (!output.empty()) {
      write_file(output, result);
    } else {
      out << result;
    }
  } catch (const Error& e) {
    err << e.name() << "\n" << e.detail() << "\n";
    return e.kind() == ErrorKind::ParseError ? kParseError : kDomainError;
  }
  return kOk;
}

}  // namespace aclat::cli
