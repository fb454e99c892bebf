#include "commvar/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "commvar/errors.hpp"

namespace commvar::render {

Json poly_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.dense()) coeffs.push_back(to_string(c));
  Json j;
  j["coefficients"] = std::move(coeffs);
  return j;
}

Poly poly_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coefficients")) {
    Rational q;
    if (q.set_str(c.get<std::string>(), 10) != 0) throw InvalidArgument("bad coefficient " + c.dump());
    q.canonicalize();
    coeffs.push_back(q);
  }
  return Poly::from_dense(coeffs);
}

Json partition_json(const Partition& p) {
  Json j = Json::array();
  for (unsigned part : p.parts()) j.push_back(part);
  return j;
}

std::string poly_plain(const Poly& p) { return p.to_string(); }

std::string poly_latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [d, c] : p.terms()) {
    const Rational mag = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    std::string num = mag.get_den() == 1
                          ? mag.get_num().get_str()
                          : "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    if (d == 0) {
      s += num;
      continue;
    }
    if (mag != 1) s += num + " ";
    s += d == 1 ? std::string("t") : "t^{" + std::to_string(d) + "}";
  }
  return s;
}

Json classes_json(const WeylData& weyl) {
  Json classes = Json::array();
  for (const auto& c : weyl.classes) {
    Json entry;
    Json desc;
    desc["positive"] = partition_json(c.descriptor.positive);
    desc["negative"] = partition_json(c.descriptor.negative);
    entry["descriptor"] = std::move(desc);
    entry["label"] = c.descriptor.to_string(weyl.cartan.family());
    entry["size"] = c.size.get_str();
    entry["det_poly"] = poly_json(c.det_poly);
    classes.push_back(std::move(entry));
  }
  Json j;
  j["order"] = weyl.order.get_str();
  j["degrees"] = weyl.degrees;
  j["classes"] = std::move(classes);
  return j;
}

std::string classes_plain(const WeylData& weyl) {
  std::ostringstream out;
  out << "W(" << weyl.cartan.name() << "): order " << weyl.order.get_str() << ", degrees";
  for (unsigned d : weyl.degrees) out << ' ' << d;
  out << ", " << weyl.classes.size() << " classes\n";
  for (const auto& c : weyl.classes)
    out << c.descriptor.to_string(weyl.cartan.family()) << "\t" << c.size.get_str() << "\t"
        << c.det_poly.to_string("s") << "\n";
  return out.str();
}

Json poincare_json(const PoincareResult& r) {
  Json j;
  j["poly"] = poly_json(r.poly);
  j["plain"] = poly_plain(r.poly);
  j["total_dim"] = r.total_dim.get_str();
  return j;
}

Json equivariant_json(const EquivariantResult& r) {
  Json coeffs = Json::array();
  for (const Integer& c : r.truncation) coeffs.push_back(c.get_str());
  Json j;
  j["numerator"] = poly_json(r.series.numerator());
  j["denominator"] = poly_json(r.series.denominator());
  j["truncate"] = r.truncation.empty() ? 0 : r.truncation.size() - 1;
  j["coefficients"] = std::move(coeffs);
  return j;
}

std::string equivariant_plain(const EquivariantResult& r) {
  std::ostringstream out;
  out << "(" << poly_plain(r.series.numerator()) << ") / (" << poly_plain(r.series.denominator())
      << ")\n";
  for (std::size_t i = 0; i < r.truncation.size(); ++i) out << (i ? " " : "") << r.truncation[i].get_str();
  out << "\n";
  return out.str();
}

std::string equivariant_latex(const EquivariantResult& r) {
  return "\\frac{" + poly_latex(r.series.numerator()) + "}{" + poly_latex(r.series.denominator()) +
         "}\n";
}

Json character_table_json(const CharacterTable& table) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    Json row;
    row["label"] = table.chi_label(i);
    row["partition"] = partition_json(table.rows[i]);
    row["values"] = table.values[i];
    rows.push_back(std::move(row));
  }
  Json columns = Json::array();
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    Json col;
    col["cycle_type"] = partition_json(table.columns[c]);
    col["cycle"] = table.columns[c].cycle_notation();
    col["size"] = table.class_sizes[c].get_str();
    columns.push_back(std::move(col));
  }
  Json j;
  j["m"] = table.m;
  j["columns"] = std::move(columns);
  j["rows"] = std::move(rows);
  return j;
}

std::string character_table_plain(const CharacterTable& table) {
  std::vector<std::string> header{""};
  for (const auto& c : table.columns) header.push_back(c.cycle_notation());
  std::vector<std::vector<std::string>> cells{header};
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    std::vector<std::string> line{table.chi_label(i)};
    for (long v : table.values[i]) line.push_back(std::to_string(v));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());

  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t k = 0; k < cells[r].size(); ++k) {
      out << std::string(width[k] - cells[r][k].size(), ' ') << cells[r][k];
      out << (k == 0 ? " | " : (k + 1 < cells[r].size() ? "  " : ""));
    }
    out << "\n";
    if (r == 0) {
      std::size_t total = width[0] + 3;
      for (std::size_t k = 1; k < width.size(); ++k) total += width[k] + (k + 1 < width.size() ? 2 : 0);
      out << std::string(total, '-') << "\n";
    }
  }
  for (std::size_t i = 0; i < table.rows.size(); ++i)
    out << table.chi_label(i) << " = " << table.rows[i].to_string() << "\n";
  return out.str();
}

std::string character_table_latex(const CharacterTable& table) {
  std::ostringstream out;
  out << "\\begin{tabular}{c|" << std::string(table.columns.size(), 'c') << "}\n ";
  for (const auto& c : table.columns) out << " & " << c.cycle_notation();
  out << "\\\\\n\\hline\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    out << "$\\chi_" << (i + 1) << "$";
    for (long v : table.values[i]) out << " & " << v;
    out << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

std::string char_poly_text(const std::vector<IsotypicComponent>& components,
                           const CharacterTable& table, bool latex) {
  // degree -> (row index -> multiplicity)
  std::map<unsigned, std::map<std::size_t, Integer>> by_degree;
  for (const auto& comp : components) {
    const std::size_t row = table.row_index(comp.irreducible);
    for (const auto& [d, m] : comp.multiplicity.terms()) by_degree[d][row] = m.get_num();
  }
  auto chi = [&](std::size_t row) {
    return latex ? "\\chi_{" + std::to_string(row + 1) + "}" : table.chi_label(row);
  };
  std::string s;
  for (const auto& [d, rows] : by_degree) {
    if (!s.empty()) s += " + ";
    std::string coeff;
    for (const auto& [row, m] : rows) {
      if (!coeff.empty()) coeff += " + ";
      if (m != 1) coeff += m.get_str() + (latex ? " " : "*");
      coeff += chi(row);
    }
    const bool compound = rows.size() > 1 || rows.begin()->second != 1;
    if (d > 0 && compound) coeff = "(" + coeff + ")";
    s += coeff;
    if (d > 0) {
      s += latex ? " t" : "*t";
      if (d > 1) s += latex ? "^{" + std::to_string(d) + "}" : "^" + std::to_string(d);
    }
  }
  return s.empty() ? "0" : s;
}

Json isotypic_json(const std::vector<IsotypicComponent>& components, const CharacterTable& table) {
  Json arr = Json::array();
  for (const auto& comp : components) {
    Json e;
    e["label"] = table.chi_label(table.row_index(comp.irreducible));
    e["partition"] = partition_json(comp.irreducible);
    e["multiplicity"] = poly_json(comp.multiplicity);
    arr.push_back(std::move(e));
  }
  return arr;
}

namespace {

Poly trivial_multiplicity(const WDecomposition& d) {
  const Partition trivial(std::vector<unsigned>{d.table.m});
  for (const auto& comp : d.total)
    if (comp.irreducible == trivial) return comp.multiplicity;
  return Poly();
}

}  // namespace

Json char_poly_json(const WDecomposition& d, unsigned n) {
  Json labels = Json::array();
  for (std::size_t i = 0; i < d.table.rows.size(); ++i) {
    Json l;
    l["label"] = d.table.chi_label(i);
    l["partition"] = partition_json(d.table.rows[i]);
    labels.push_back(std::move(l));
  }
  Json j;
  j["labels"] = std::move(labels);
  j["exterior"] = isotypic_json(d.exterior, d.table);
  j["coinvariant"] = isotypic_json(d.coinvariant, d.table);
  j["total"] = isotypic_json(d.total, d.table);
  j["invariant_poly"] = poly_json(trivial_multiplicity(d));
  j["expression"] = "<chi_1, (" + char_poly_text(d.exterior, d.table, false) + ")^" +
                    std::to_string(n) + " (" + char_poly_text(d.coinvariant, d.table, false) + ")>";
  return j;
}

std::string char_poly_plain(const WDecomposition& d, unsigned n) {
  std::ostringstream out;
  out << "P_t = <chi_1, (" << char_poly_text(d.exterior, d.table, false) << ")^" << n << " ("
      << char_poly_text(d.coinvariant, d.table, false) << ")>\n";
  out << "    = " << poly_plain(trivial_multiplicity(d)) << "\n";
  for (std::size_t i = 0; i < d.table.rows.size(); ++i)
    out << d.table.chi_label(i) << " = " << d.table.rows[i].to_string() << "\n";
  return out.str();
}

std::string char_poly_latex(const WDecomposition& d, unsigned n) {
  return "P_t = \\langle \\chi_{1}, (" + char_poly_text(d.exterior, d.table, true) + ")^{" +
         std::to_string(n) + "} (" + char_poly_text(d.coinvariant, d.table, true) +
         ") \\rangle = " + poly_latex(trivial_multiplicity(d)) + "\n";
}

Json torsion_json(const CartanType& cartan, const std::set<unsigned long>& primes) {
  Json j;
  j["weyl_order"] = weyl_order(cartan).get_str();
  j["primes"] = primes;
  return j;
}

Json document(const Json& query, const Json& result, long long elapsed_us) {
  Json doc;
  doc["schema_version"] = schema_version;
  doc["query"] = query;
  doc["result"] = result;
  Json prov;
  prov["engine"] = engine_version;
  prov["elapsed_us"] = elapsed_us;
  doc["provenance"] = std::move(prov);
  return doc;
}

}  // namespace commvar::render
