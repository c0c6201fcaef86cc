// Copyright 2026 The csvent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csvent/density_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace csvent {

void write_density(std::ostream& out, const Matrix& rho,
                   const BipartiteDims& dims) {
  if (rho.rows() != dims.total() || rho.cols() != dims.total()) {
    throw ShapeError("density matrix does not match dims");
  }
  out << "dims " << dims.d_a() << ' ' << dims.d_b() << '\n';
  char buf[96];
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      const Complex z = rho(r, c);
      if (std::abs(z) <= kDumpThreshold) continue;
      std::snprintf(buf, sizeof buf, "%ld %ld %.17g %.17g\n",
                    static_cast<long>(r), static_cast<long>(c), z.real(),
                    z.imag());
      out << buf;
    }
  }
}

namespace {

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space(true);
    return pos_ >= text_.size();
  }

  // Next whitespace-delimited token on the current line.
  std::string_view token(const char* what) {
    skip_space(false);
    if (pos_ >= text_.size() || text_[pos_] == '\n') {
      throw ParseError(std::string("expected ") + what, pos_);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    last_ = start;
    return text_.substr(start, pos_ - start);
  }

  void end_line() {
    skip_space(false);
    if (pos_ < text_.size() && text_[pos_] != '\n') {
      throw ParseError("unexpected trailing content", pos_);
    }
    if (pos_ < text_.size()) ++pos_;
  }

  std::size_t last() const { return last_; }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

  void skip_space(bool newlines) {
    while (pos_ < text_.size() && is_space(text_[pos_]) &&
           (newlines || text_[pos_] != '\n')) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t last_ = 0;
};

template <typename T>
T parse_number(Tokenizer& tok, const char* what) {
  const std::string_view s = tok.token(what);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("malformed ") + what + " '" + std::string(s) + "'",
                     tok.last());
  }
  return value;
}

}  // namespace

DensityFile parse_density(std::string_view text) {
  Tokenizer tok(text);
  if (tok.at_end()) throw ParseError("empty density file", 0);
  if (tok.token("'dims' header") != "dims") {
    throw ParseError("file must start with 'dims d_A d_B'", tok.last());
  }
  const int da = parse_number<int>(tok, "d_A");
  const std::size_t db_at = tok.last();
  const int db = parse_number<int>(tok, "d_B");
  tok.end_line();
  if (da < 1 || db < 1) throw ParseError("dimensions must be positive", db_at);
  BipartiteDims dims(da, db);
  const long n = dims.total();
  Matrix m = Matrix::Zero(n, n);
  while (!tok.at_end()) {
    const long r = parse_number<long>(tok, "row index");
    const std::size_t row_at = tok.last();
    const long c = parse_number<long>(tok, "column index");
    if (r < 0 || r >= n || c < 0 || c >= n) {
      throw ParseError("entry index out of range", row_at);
    }
    const double re = parse_number<double>(tok, "real part");
    const double im = parse_number<double>(tok, "imaginary part");
    tok.end_line();
    m(r, c) = Complex(re, im);
  }
  return {std::move(m), dims};
}

DensityFile read_density(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open density file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_density(buf.str());
}

}  // namespace csvent
