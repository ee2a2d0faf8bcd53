/* Copyright 2026 The yangian-omega Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "yangian/omega.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "yangian/errors.hpp"
#include "yangian/linalg.hpp"

namespace yangian {

AlgebraSpec::AlgebraSpec(std::string name, std::vector<std::string> labels, const std::vector<TableEntry>& table)
    : name_(std::move(name)), labels_(std::move(labels)) {
    if (labels_.empty()) throw StructuralError("AlgebraSpec: dimension must be positive");
    for (std::size_t a = 0; a < labels_.size(); ++a) {
        for (std::size_t b = a + 1; b < labels_.size(); ++b) {
            if (labels_[a] == labels_[b]) throw StructuralError("AlgebraSpec: duplicate basis label '" + labels_[a] + "'");
        }
    }
    const int n = dim();
    table_.resize(static_cast<std::size_t>(n * n));
    for (const auto& e : table) {
        if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n) {
            throw StructuralError("AlgebraSpec: table entry (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                  ") out of range");
        }
        for (const auto& [k, c] : e.product) {
            if (k < 0 || k >= n) {
                throw StructuralError("AlgebraSpec: product index k=" + std::to_string(k) + " out of range in entry (" +
                                      std::to_string(e.i) + "," + std::to_string(e.j) + ")");
            }
        }
        table_[static_cast<std::size_t>(e.i * n + e.j)] += e.product;
    }
}

BasisVector AlgebraSpec::multiply(const BasisVector& a, const BasisVector& b) const {
    BasisVector out;
    for (const auto& [i, ci] : a) {
        for (const auto& [j, cj] : b) out.add_scaled(product(i, j), ci * cj);
    }
    return out;
}

std::vector<TableEntry> AlgebraSpec::entries() const {
    std::vector<TableEntry> out;
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) {
            if (!product(i, j).is_zero()) out.push_back({i, j, product(i, j)});
        }
    }
    return out;
}

OmegaElement::OmegaElement(OmegaPtr algebra, BasisVector coeffs) : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    for (const auto& [k, c] : coeffs_) {
        if (k < 0 || k >= algebra_->dim()) throw StructuralError("OmegaElement: basis index out of range");
    }
}

OmegaElement OmegaElement::basis(OmegaPtr algebra, int b) { return OmegaElement(std::move(algebra), BasisVector(b)); }

OmegaElement& OmegaElement::operator+=(const OmegaElement& o) {
    if (algebra_ != o.algebra_) throw StructuralError("OmegaElement: mismatched algebras");
    coeffs_ += o.coeffs_;
    return *this;
}

OmegaElement multiply(const OmegaElement& a, const OmegaElement& b) {
    if (a.algebra() != b.algebra()) throw StructuralError("multiply: operands belong to different algebras");
    return OmegaElement(a.algebra(), a.algebra()->multiply(a.coeffs(), b.coeffs()));
}

std::optional<std::array<int, 3>> check_associativity(const AlgebraSpec& spec) {
    const int n = spec.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                BasisVector left = spec.multiply(spec.product(i, j), BasisVector(k));
                BasisVector right = spec.multiply(BasisVector(i), spec.product(j, k));
                if (left != right) return std::array<int, 3>{i, j, k};
            }
        }
    }
    return std::nullopt;
}

std::optional<OmegaElement> detect_unit(const OmegaPtr& spec) {
    // Unknowns e_a; equations e*x_i = x_i and x_i*e = x_i, coordinate by coordinate.
    const int n = spec->dim();
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            std::vector<Rational> left(static_cast<std::size_t>(n));
            std::vector<Rational> right(static_cast<std::size_t>(n));
            for (int u = 0; u < n; ++u) {
                left[static_cast<std::size_t>(u)] = spec->product(u, i).coeff(k);
                right[static_cast<std::size_t>(u)] = spec->product(i, u).coeff(k);
            }
            Rational rhs = i == k ? Rational(1) : Rational(0);
            a.push_back(std::move(left));
            b.push_back(rhs);
            a.push_back(std::move(right));
            b.push_back(rhs);
        }
    }
    auto sol = solve_dense(std::move(a), std::move(b));
    if (!sol) return std::nullopt;
    BasisVector e;
    for (int u = 0; u < n; ++u) e.add(u, (*sol)[static_cast<std::size_t>(u)]);
    return OmegaElement(spec, e);
}

OmegaPtr direct_sum_C(int copies) {
    if (copies <= 0) throw StructuralError("direct_sum_C: number of copies must be positive");
    std::vector<std::string> labels;
    std::vector<TableEntry> table;
    for (int a = 0; a < copies; ++a) {
        labels.push_back(copies == 1 ? "1" : "u" + std::to_string(a + 1));
        table.push_back({a, a, BasisVector(a)});
    }
    std::string name = copies == 1 ? "C" : "C^" + std::to_string(copies);
    return std::make_shared<const AlgebraSpec>(name, labels, table);
}

OmegaPtr matrix_algebra(int k) {
    if (k <= 0) throw StructuralError("matrix_algebra: size must be positive");
    std::vector<std::string> labels;
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) labels.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
    }
    // E_rc E_uv = delta_cu E_rv
    std::vector<TableEntry> table;
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            for (int v = 0; v < k; ++v) table.push_back({r * k + c, c * k + v, BasisVector(r * k + v)});
        }
    }
    return std::make_shared<const AlgebraSpec>("Mat(" + std::to_string(k) + ")", labels, table);
}

OmegaPtr null_algebra(int n) {
    if (n <= 0) throw StructuralError("null_algebra: dimension must be positive");
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) labels.push_back("z" + std::to_string(a + 1));
    return std::make_shared<const AlgebraSpec>("null(" + std::to_string(n) + ")", labels, std::vector<TableEntry>{});
}

OmegaPtr nonassoc_witness() {
    std::vector<TableEntry> table{{0, 0, BasisVector(1)}, {0, 1, BasisVector(0)}};
    return std::make_shared<const AlgebraSpec>("nonassoc_witness", std::vector<std::string>{"x", "y"}, table);
}

std::optional<OmegaPtr> builtin(const std::string& name) {
    if (name == "C") return direct_sum_C(1);
    if (name == "nonassoc_witness") return nonassoc_witness();
    static const std::regex pattern(R"(^(direct_sum_C|C\^|matrix|Mat|null)(?::|\(|)(-?\d+)\)?$)");
    std::smatch m;
    if (!std::regex_match(name, m, pattern)) return std::nullopt;
    const std::string kind = m[1];
    const int p = std::stoi(m[2]);
    if (kind == "direct_sum_C" || kind == "C^") return direct_sum_C(p);
    if (kind == "matrix" || kind == "Mat") return matrix_algebra(p);
    return null_algebra(p);
}

namespace {

long long json_int(const nlohmann::json& j, const std::string& field, const std::string& where) {
    if (!j.contains(field)) throw ParseError(where + ": missing field '" + field + "'");
    const auto& v = j.at(field);
    if (!v.is_number_integer()) throw ParseError(where + "." + field + ": expected an integer");
    return v.get<long long>();
}

}  // namespace

OmegaPtr parse_omega_json(const std::string& text, const std::string& name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level: expected an object");
    const long long dim = json_int(doc, "dim", "top level");
    if (dim <= 0) throw ParseError("dim: must be positive");
    std::vector<std::string> labels;
    if (doc.contains("basis")) {
        const auto& basis = doc.at("basis");
        if (!basis.is_array()) throw ParseError("basis: expected an array of strings");
        for (std::size_t a = 0; a < basis.size(); ++a) {
            if (!basis[a].is_string()) throw ParseError("basis[" + std::to_string(a) + "]: expected a string");
            labels.push_back(basis[a].get<std::string>());
        }
        if (static_cast<long long>(labels.size()) != dim) {
            throw ParseError("basis: has " + std::to_string(labels.size()) + " labels but dim is " + std::to_string(dim));
        }
    } else {
        for (long long a = 0; a < dim; ++a) labels.push_back("x" + std::to_string(a + 1));
    }
    std::vector<TableEntry> table;
    std::vector<bool> seen(static_cast<std::size_t>(dim * dim), false);
    if (doc.contains("table")) {
        const auto& entries = doc.at("table");
        if (!entries.is_array()) throw ParseError("table: expected an array");
        for (std::size_t e = 0; e < entries.size(); ++e) {
            const std::string where = "table[" + std::to_string(e) + "]";
            const auto& entry = entries[e];
            if (!entry.is_object()) throw ParseError(where + ": expected an object");
            const long long i = json_int(entry, "i", where);
            const long long j = json_int(entry, "j", where);
            if (i < 0 || i >= dim) throw ParseError(where + ".i = " + std::to_string(i) + " out of range [0," + std::to_string(dim) + ")");
            if (j < 0 || j >= dim) throw ParseError(where + ".j = " + std::to_string(j) + " out of range [0," + std::to_string(dim) + ")");
            auto slot = static_cast<std::size_t>(i * dim + j);
            if (seen[slot]) throw ParseError(where + ": duplicate entry for (" + std::to_string(i) + "," + std::to_string(j) + ")");
            seen[slot] = true;
            TableEntry te{static_cast<int>(i), static_cast<int>(j), {}};
            if (!entry.contains("terms") || !entry.at("terms").is_array()) throw ParseError(where + ".terms: expected an array");
            const auto& terms = entry.at("terms");
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const std::string tw = where + ".terms[" + std::to_string(t) + "]";
                const long long k = json_int(terms[t], "k", tw);
                if (k < 0 || k >= dim) throw ParseError(tw + ".k = " + std::to_string(k) + " out of range [0," + std::to_string(dim) + ")");
                const long long num = json_int(terms[t], "num", tw);
                const long long den = terms[t].contains("den") ? json_int(terms[t], "den", tw) : 1;
                if (den == 0) throw ParseError(tw + ".den: zero denominator");
                te.product.add(static_cast<int>(k), Rational(num, den));
            }
            table.push_back(std::move(te));
        }
    }
    try {
        return std::make_shared<const AlgebraSpec>(doc.value("name", name), labels, table);
    } catch (const StructuralError& e) {
        throw ParseError(e.what());
    }
}

OmegaPtr load_omega_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_omega_json(buf.str(), path);
}

std::string to_json(const AlgebraSpec& spec) {
    nlohmann::json doc;
    doc["name"] = spec.name();
    doc["dim"] = spec.dim();
    doc["basis"] = spec.labels();
    doc["table"] = nlohmann::json::array();
    for (const auto& e : spec.entries()) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [k, c] : e.product) {
            terms.push_back({{"k", k}, {"num", c.numerator_i64()}, {"den", c.denominator_i64()}});
        }
        doc["table"].push_back({{"i", e.i}, {"j", e.j}, {"terms", terms}});
    }
    return doc.dump(2);
}

}  // namespace yangian
