#include "adnil/emit.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "adnil/jordan.hpp"

namespace adnil {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format: " + std::string(text) +
                              " (expected text, json or csv)");
}

std::string csv_field(std::string_view value) {
  if (value.find(',') == std::string_view::npos) return std::string(value);
  return "\"" + std::string(value) + "\"";
}

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string emit_table1(const std::vector<NLambdaTable>& tables,
                        OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = "rank,lambda,count\n";
    for (const NLambdaTable& t : tables) {
      long long total = 0;
      for (const auto& [lambda, count] : t.counts) {
        out += std::to_string(t.rank.n) + "," +
               csv_field(format_partition(lambda)) + "," +
               std::to_string(count) + "\n";
        total += count;
      }
      out += std::to_string(t.rank.n) + ",total," + std::to_string(total) +
             "\n";
    }
    return out;
  }
  if (format == OutputFormat::json) {
    ordered_json root;
    root["tables"] = ordered_json::array();
    for (const NLambdaTable& t : tables) {
      ordered_json entry;
      entry["rank"] = t.rank.n;
      ordered_json counts;
      long long total = 0;
      for (const auto& [lambda, count] : t.counts) {
        counts[format_partition(lambda)] = count;
        total += count;
      }
      entry["counts"] = std::move(counts);
      entry["total"] = total;
      root["tables"].push_back(std::move(entry));
    }
    return dump(root);
  }
  std::string out;
  for (const NLambdaTable& t : tables) {
    out += "A_" + std::to_string(t.rank.n) + "\n";
    std::size_t width = 6;
    for (const auto& [lambda, count] : t.counts)
      width = std::max(width, format_partition(lambda).size());
    long long total = 0;
    for (const auto& [lambda, count] : t.counts) {
      out += "  " + pad(format_partition(lambda), width + 2) +
             std::to_string(count) + "\n";
      total += count;
    }
    out += "  " + pad("total", width + 2) + std::to_string(total) + "\n";
  }
  return out;
}

std::string emit_table2(const JointTable& table, OutputFormat format) {
  const int n = table.rank.n;
  const int N = n + 1;
  if (format == OutputFormat::csv) {
    std::string out =
        "# corank reading: the same cells count ((lambda*)_1, valleys) with "
        "valley columns ascending 0.." +
        std::to_string(n) + "\n";
    out += "largest";
    for (int s = n; s >= 0; --s) out += ",v=" + std::to_string(s);
    out += ",total\n";
    for (int r = 1; r <= N; ++r) {
      out += std::to_string(r);
      for (int s = n; s >= 0; --s) out += "," + std::to_string(table.at(r, s));
      out += "," + std::to_string(table.row_sum(r)) + "\n";
    }
    out += "total";
    for (int s = n; s >= 0; --s)
      out += "," + std::to_string(table.column_sum(s));
    out += "," + std::to_string(table.total()) + "\n";
    return out;
  }
  if (format == OutputFormat::json) {
    ordered_json root;
    root["rank"] = n;
    root["columns"] = "valleys descending " + std::to_string(n) + "..0";
    root["corank_reading"] =
        "the same cells count ((lambda*)_1, valleys) with valleys ascending";
    ordered_json rows = ordered_json::array();
    ordered_json row_totals = ordered_json::array();
    for (int r = 1; r <= N; ++r) {
      ordered_json row = ordered_json::array();
      for (int s = n; s >= 0; --s) row.push_back(table.at(r, s));
      rows.push_back(std::move(row));
      row_totals.push_back(table.row_sum(r));
    }
    ordered_json column_totals = ordered_json::array();
    for (int s = n; s >= 0; --s) column_totals.push_back(table.column_sum(s));
    root["rows"] = std::move(rows);
    root["row_totals"] = std::move(row_totals);
    root["column_totals"] = std::move(column_totals);
    root["total"] = table.total();
    return dump(root);
  }
  // text: aligned grid
  std::vector<std::size_t> widths(static_cast<std::size_t>(N) + 2, 1);
  auto cell_width = [&](int column, const std::string& s) {
    widths[static_cast<std::size_t>(column)] =
        std::max(widths[static_cast<std::size_t>(column)], s.size());
  };
  cell_width(0, "largest");
  for (int s = n; s >= 0; --s) cell_width(n - s + 1, "v=" + std::to_string(s));
  cell_width(N + 1, "total");
  for (int r = 1; r <= N; ++r) {
    cell_width(0, std::to_string(r));
    for (int s = n; s >= 0; --s)
      cell_width(n - s + 1, std::to_string(table.at(r, s)));
    cell_width(N + 1, std::to_string(table.row_sum(r)));
  }
  for (int s = n; s >= 0; --s)
    cell_width(n - s + 1, std::to_string(table.column_sum(s)));
  cell_width(N + 1, std::to_string(table.total()));

  std::string out = "joint (largest part, valleys) counts for A_" +
                    std::to_string(n) +
                    "; cells also count ((lambda*)_1, valleys) with valley "
                    "columns read in ascending order\n";
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out += "  ";
      out += pad(cells[c], widths[c]);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  };
  std::vector<std::string> header{"largest"};
  for (int s = n; s >= 0; --s) header.push_back("v=" + std::to_string(s));
  header.push_back("total");
  emit_row(header);
  for (int r = 1; r <= N; ++r) {
    std::vector<std::string> row{std::to_string(r)};
    for (int s = n; s >= 0; --s) row.push_back(std::to_string(table.at(r, s)));
    row.push_back(std::to_string(table.row_sum(r)));
    emit_row(row);
  }
  std::vector<std::string> footer{"total"};
  for (int s = n; s >= 0; --s)
    footer.push_back(std::to_string(table.column_sum(s)));
  footer.push_back(std::to_string(table.total()));
  emit_row(footer);
  return out;
}

std::string emit_kreweras(const KrewerasTable& table, OutputFormat format) {
  const std::vector<Partition> keys = partitions_of(table.rank.n + 1);
  auto enumerated = [&](const Partition& p) -> long long {
    auto it = table.counts.find(p);
    return it == table.counts.end() ? 0 : it->second;
  };
  if (format == OutputFormat::csv) {
    std::string out = "lambda,count,formula,match\n";
    long long total = 0;
    unsigned long long formula_total = 0;
    for (const Partition& p : keys) {
      const long long count = enumerated(p);
      const unsigned long long formula = kreweras_number(p, table.rank);
      total += count;
      formula_total += formula;
      out += csv_field(format_partition(p)) + "," + std::to_string(count) +
             "," + std::to_string(formula) + "," +
             (static_cast<unsigned long long>(count) == formula ? "yes"
                                                                : "NO") +
             "\n";
    }
    out += "total," + std::to_string(total) + "," +
           std::to_string(formula_total) + "," +
           (static_cast<unsigned long long>(total) == formula_total ? "yes"
                                                                    : "NO") +
           "\n";
    return out;
  }
  if (format == OutputFormat::json) {
    ordered_json root;
    root["rank"] = table.rank.n;
    ordered_json rows = ordered_json::array();
    long long total = 0;
    for (const Partition& p : keys) {
      const long long count = enumerated(p);
      const unsigned long long formula = kreweras_number(p, table.rank);
      total += count;
      ordered_json row;
      row["lambda"] = format_partition(p);
      row["count"] = count;
      row["formula"] = formula;
      row["match"] = static_cast<unsigned long long>(count) == formula;
      rows.push_back(std::move(row));
    }
    root["rows"] = std::move(rows);
    root["total"] = total;
    return dump(root);
  }
  std::string out = "Kreweras partition counts for A_" +
                    std::to_string(table.rank.n) + "\n";
  std::size_t width = 6;
  for (const Partition& p : keys)
    width = std::max(width, format_partition(p).size());
  long long total = 0;
  for (const Partition& p : keys) {
    const long long count = enumerated(p);
    const unsigned long long formula = kreweras_number(p, table.rank);
    total += count;
    out += "  " + pad(format_partition(p), width + 2) +
           pad(std::to_string(count), 10) + "formula " +
           std::to_string(formula) +
           (static_cast<unsigned long long>(count) == formula ? ""
                                                              : "  MISMATCH") +
           "\n";
  }
  out += "  " + pad("total", width + 2) + std::to_string(total) + "\n";
  return out;
}

std::string emit_classes(const ClassTable& table, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = "class,size,label,representative\n";
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
      const IdealClass& cls = table.classes[c];
      out += std::to_string(c) + "," + std::to_string(cls.ideals.size()) +
             "," +
             csv_field(cls.label ? format_partition(*cls.label) : "") + "," +
             csv_field(format_ideal(cls.representative)) + "\n";
    }
    return out;
  }
  if (format == OutputFormat::json) {
    ordered_json root;
    root["rank"] = table.rank.n;
    root["move"] = std::string(to_string(table.kind));
    ordered_json classes = ordered_json::array();
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
      const IdealClass& cls = table.classes[c];
      ordered_json entry;
      entry["class"] = c;
      entry["size"] = cls.ideals.size();
      if (cls.label) entry["label"] = format_partition(*cls.label);
      entry["representative"] = format_ideal(cls.representative);
      classes.push_back(std::move(entry));
    }
    root["classes"] = std::move(classes);
    root["class_count"] = table.classes.size();
    return dump(root);
  }
  std::string out = std::string(to_string(table.kind)) +
                    "-move classes for A_" + std::to_string(table.rank.n) +
                    ": " + std::to_string(table.classes.size()) + " classes\n";
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    const IdealClass& cls = table.classes[c];
    out += "  class " + std::to_string(c) + ": size " +
           std::to_string(cls.ideals.size());
    if (cls.label) out += ", lambda " + format_partition(*cls.label);
    out += ", representative " + format_ideal(cls.representative) + "\n";
  }
  return out;
}

std::string emit_enumeration(const std::vector<RootIdeal>& ideals,
                             OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = "index,ideal,ballot\n";
    for (std::size_t k = 0; k < ideals.size(); ++k)
      out += std::to_string(k) + "," + csv_field(format_ideal(ideals[k])) +
             "," + ideal_to_ballot(ideals[k]).bits() + "\n";
    return out;
  }
  if (format == OutputFormat::json) {
    ordered_json root;
    ordered_json list = ordered_json::array();
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      ordered_json entry;
      entry["index"] = k;
      entry["ideal"] = format_ideal(ideals[k]);
      entry["ballot"] = ideal_to_ballot(ideals[k]).bits();
      list.push_back(std::move(entry));
    }
    root["count"] = ideals.size();
    root["ideals"] = std::move(list);
    return dump(root);
  }
  std::string out;
  for (const RootIdeal& ideal : ideals) out += format_ideal(ideal) + "\n";
  return out;
}

std::string emit_check_reports(const std::vector<CheckReport>& reports,
                               OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json root = ordered_json::array();
    for (const CheckReport& report : reports) {
      ordered_json entry;
      entry["name"] = report.name;
      entry["ok"] = report.ok;
      entry["lines"] = report.lines;
      root.push_back(std::move(entry));
    }
    return dump(root);
  }
  if (format == OutputFormat::csv) {
    std::string out = "check,ok,detail\n";
    for (const CheckReport& report : reports)
      for (const std::string& line : report.lines)
        out += report.name + "," + (report.ok ? "yes" : "NO") + "," +
               csv_field(line) + "\n";
    return out;
  }
  std::string out;
  for (const CheckReport& report : reports) {
    out += report.name + ": " + (report.ok ? "ok" : "FAILED") + "\n";
    for (const std::string& line : report.lines) out += "  " + line + "\n";
  }
  return out;
}

}  // namespace adnil
