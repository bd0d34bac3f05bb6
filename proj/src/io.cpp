#include "qtp/io.hpp"

#include <fstream>
#include <sstream>

#include "qtp/errors.hpp"

namespace qtp::io {

namespace {

// SAX consumer that builds a DOM but keeps float lexemes verbatim.
class ExactSax : public nlohmann::json_sax<Json> {
 public:
  Json take() { return std::move(root_); }

  bool null() override { return put(nullptr); }
  bool boolean(bool val) override { return put(val); }
  bool number_integer(number_integer_t val) override { return put(val); }
  bool number_unsigned(number_unsigned_t val) override { return put(val); }
  bool number_float(number_float_t /*val*/, const string_t& s) override { return put(s); }
  bool string(string_t& val) override { return put(val); }
  bool binary(binary_t& val) override { return put(Json::binary(val)); }

  bool start_object(std::size_t /*elements*/) override { return open(Json::object()); }
  bool key(string_t& val) override {
    key_ = val;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t /*elements*/) override { return open(Json::array()); }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }

  bool parse_error(std::size_t /*position*/, const std::string& /*last_token*/,
                   const nlohmann::detail::exception& ex) override {
    throw ParseError(std::string("malformed JSON: ") + ex.what());
  }

 private:
  Json* place(Json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return &root_;
    }
    Json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(value));
      return &top.back();
    }
    top[key_] = std::move(value);
    return &top[key_];
  }
  bool put(Json value) {
    place(std::move(value));
    return true;
  }
  bool open(Json container) {
    stack_.push_back(place(std::move(container)));
    return true;
  }

  Json root_;
  std::vector<Json*> stack_;
  std::string key_;
};

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) {
    throw ParseError(where + ": expected a JSON object");
  }
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(where + ": missing field \"" + name + "\"");
  }
  return *it;
}

std::size_t positive_size(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw ParseError(where + ": expected a positive integer");
  }
  return j.get<std::size_t>();
}

std::string join(const std::string& prefix, const std::string& name) {
  return prefix.empty() ? name : prefix + "." + name;
}

void emit_scalar(std::ostringstream& os, const GaussianRational& z) {
  if (z.is_real()) {
    os << '"' << GaussianRational::rational_str(z.re()) << '"';
  } else {
    os << "{\"re\": \"" << GaussianRational::rational_str(z.re()) << "\", \"im\": \""
       << GaussianRational::rational_str(z.im()) << "\"}";
  }
}

void emit_matrix(std::ostringstream& os, const Matrix& m, const std::string& indent) {
  os << "[\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      emit_scalar(os, m(r, c));
    }
    os << "]" << (r + 1 < m.rows() ? "," : "") << "\n";
  }
  os << indent << "]";
}

void emit_problem_body(std::ostringstream& os, const QuadPoly2P& q, const std::string& indent) {
  os << "{\n" << indent << "  \"n\": " << q.n() << ",\n" << indent << "  \"coefficients\": {\n";
  for (std::size_t k = 0; k < kCoefOrder.size(); ++k) {
    Coef c = kCoefOrder[k];
    os << indent << "    \"" << coef_name(c) << "\": ";
    emit_matrix(os, q[c], indent + "    ");
    os << (k + 1 < kCoefOrder.size() ? "," : "") << "\n";
  }
  os << indent << "  }\n" << indent << "}";
}

}  // namespace

Json parse_json(std::string_view text) {
  ExactSax sax;
  try {
    Json::sax_parse(text.begin(), text.end(), &sax);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return sax.take();
}

GaussianRational parse_scalar(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) {
      return j.is_number_unsigned() ? GaussianRational(mpq_class(mpz_class(std::to_string(j.get<std::uint64_t>()))))
                                    : GaussianRational(mpq_class(mpz_class(std::to_string(j.get<std::int64_t>()))));
    }
    if (j.is_string()) {
      return GaussianRational::parse(j.get<std::string>());
    }
    if (j.is_object()) {
      for (const auto& [k, v] : j.items()) {
        if (k != "re" && k != "im") throw ParseError("unexpected key \"" + k + "\" in complex scalar");
      }
      auto part = [&](const char* name) -> mpq_class {
        auto it = j.find(name);
        if (it == j.end()) return 0;
        GaussianRational z = parse_scalar(*it, where + "." + name);
        if (!z.is_real()) throw ParseError("complex value inside \"" + std::string(name) + "\"");
        return z.re();
      };
      return {part("re"), part("im")};
    }
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a number, a \"p/q\" string, or {\"re\", \"im\"}");
}

Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError(where + ": expected an array of " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_where = where + "[" + std::to_string(r) + "]";
    const Json& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError(row_where + ": expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = parse_scalar(row[c], row_where + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

QuadPoly2P problem_from_json(const Json& j, const std::string& where) {
  const std::size_t n = positive_size(field(j, "n", where.empty() ? "problem" : where), join(where, "n"));
  const std::string coef_where = join(where, "coefficients");
  const Json& coefs = field(j, "coefficients", where.empty() ? "problem" : where);
  std::array<Matrix, 6> m;
  for (std::size_t k = 0; k < kCoefOrder.size(); ++k) {
    const char* name = coef_name(kCoefOrder[k]).data();
    m[k] = parse_matrix(field(coefs, name, coef_where), n, n, join(coef_where, name));
  }
  return QuadPoly2P(std::move(m));
}

QuadSystem2P system_from_json(const Json& j) {
  return {problem_from_json(field(j, "Q1", "system"), "Q1"), problem_from_json(field(j, "Q2", "system"), "Q2")};
}

Pencil2P pencil_from_json(const Json& j) {
  const std::size_t m = positive_size(field(j, "m", "pencil"), "m");
  return {parse_matrix(field(j, "A1hat", "pencil"), m, m, "A1hat"),
          parse_matrix(field(j, "A2hat", "pencil"), m, m, "A2hat"),
          parse_matrix(field(j, "A3hat", "pencil"), m, m, "A3hat")};
}

FreeBlocks blocks_from_json(const Json& j) {
  const std::size_t n = positive_size(field(j, "n", "blocks"), "n");
  return {n, parse_matrix(field(j, "Y1", "blocks"), 3 * n, n, "Y1"),
          parse_matrix(field(j, "Z1", "blocks"), 3 * n, n, "Z1"),
          parse_matrix(field(j, "Z2", "blocks"), 3 * n, n, "Z2")};
}

std::string write_problem(const QuadPoly2P& q) {
  std::ostringstream os;
  emit_problem_body(os, q, "");
  os << "\n";
  return os.str();
}

std::string write_system(const QuadSystem2P& sys) {
  std::ostringstream os;
  os << "{\n  \"Q1\": ";
  emit_problem_body(os, sys.q1, "  ");
  os << ",\n  \"Q2\": ";
  emit_problem_body(os, sys.q2, "  ");
  os << "\n}\n";
  return os.str();
}

std::string write_pencil(const Pencil2P& l) {
  std::ostringstream os;
  os << "{\n  \"m\": " << l.m() << ",\n  \"A1hat\": ";
  emit_matrix(os, l.a1(), "  ");
  os << ",\n  \"A2hat\": ";
  emit_matrix(os, l.a2(), "  ");
  os << ",\n  \"A3hat\": ";
  emit_matrix(os, l.a3(), "  ");
  os << "\n}\n";
  return os.str();
}

std::string write_blocks(const FreeBlocks& b) {
  std::ostringstream os;
  os << "{\n  \"n\": " << b.n << ",\n  \"Y1\": ";
  emit_matrix(os, b.y1, "  ");
  os << ",\n  \"Z1\": ";
  emit_matrix(os, b.z1, "  ");
  os << ",\n  \"Z2\": ";
  emit_matrix(os, b.z2, "  ");
  os << "\n}\n";
  return os.str();
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write " + path.string());
  }
  out << text;
}

namespace {

template <class F>
auto read_with(const std::filesystem::path& path, F&& convert) {
  try {
    return convert(parse_json(read_text(path)));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const ShapeError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

QuadPoly2P read_problem(const std::filesystem::path& path) {
  return read_with(path, [](const Json& j) { return problem_from_json(j); });
}

QuadSystem2P read_system(const std::filesystem::path& path) { return read_with(path, system_from_json); }
Pencil2P read_pencil(const std::filesystem::path& path) { return read_with(path, pencil_from_json); }
FreeBlocks read_blocks(const std::filesystem::path& path) { return read_with(path, blocks_from_json); }

std::vector<GaussianRational> parse_scalar_list(std::string_view text) {
  std::vector<GaussianRational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(GaussianRational::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string scalar_text(const GaussianRational& z) { return z.str(); }

}  // namespace qtp::io
