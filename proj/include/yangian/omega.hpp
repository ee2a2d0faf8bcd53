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
// Finite-dimensional algebras given by structure constants.

#ifndef YANGIAN_OMEGA_HPP
#define YANGIAN_OMEGA_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "yangian/rational.hpp"
#include "yangian/sparse.hpp"

namespace yangian {

// Coordinates of an element of the algebra in its stored basis.
using BasisVector = LinComb<int>;

struct TableEntry {
    int i = 0;
    int j = 0;
    BasisVector product;  // x_i * x_j
};

/* A finite-dimensional algebra over Q.  The product of basis elements is
 * x_i x_j = sum_k c[i][j][k] x_k; unlisted products are zero.  No axioms are
 * enforced on construction: associativity and units are checked on demand.
 */
class AlgebraSpec {
public:
    AlgebraSpec(std::string name, std::vector<std::string> labels, const std::vector<TableEntry>& table);

    int dim() const { return static_cast<int>(labels_.size()); }
    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int b) const { return labels_.at(static_cast<std::size_t>(b)); }
    const BasisVector& product(int i, int j) const { return table_[static_cast<std::size_t>(i * dim() + j)]; }

    // Product of two coordinate vectors (bilinear extension of the table).
    BasisVector multiply(const BasisVector& a, const BasisVector& b) const;

    // Nonzero table entries in (i, j) order.
    std::vector<TableEntry> entries() const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<BasisVector> table_;
};

using OmegaPtr = std::shared_ptr<const AlgebraSpec>;

class OmegaElement {
public:
    explicit OmegaElement(OmegaPtr algebra, BasisVector coeffs = {});
    static OmegaElement basis(OmegaPtr algebra, int b);

    const OmegaPtr& algebra() const { return algebra_; }
    const BasisVector& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.is_zero(); }

    OmegaElement& operator+=(const OmegaElement& o);
    friend OmegaElement operator+(OmegaElement a, const OmegaElement& b) { return a += b; }
    friend OmegaElement operator*(const Rational& c, OmegaElement a) {
        a.coeffs_ *= c;
        return a;
    }
    friend bool operator==(const OmegaElement& a, const OmegaElement& b) {
        return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
    }

private:
    OmegaPtr algebra_;
    BasisVector coeffs_;
};

// Throws StructuralError when a and b belong to different algebras.
OmegaElement multiply(const OmegaElement& a, const OmegaElement& b);

// First basis triple (i, j, k), lexicographically, with (x_i x_j) x_k != x_i (x_j x_k).
std::optional<std::array<int, 3>> check_associativity(const AlgebraSpec& spec);

// The two-sided unit, if one exists.
std::optional<OmegaElement> detect_unit(const OmegaPtr& spec);

// Standard examples.  All throw StructuralError on non-positive parameters.
OmegaPtr direct_sum_C(int copies);
OmegaPtr matrix_algebra(int k);
OmegaPtr null_algebra(int n);
// Two-dimensional non-associative table: x*x = y, x*y = x, other products zero.
OmegaPtr nonassoc_witness();

// Accepts "C", "direct_sum_C:L", "direct_sum_C(L)", "matrix:k", "Mat(k)", "null:n",
// "null(n)" and "nonassoc_witness".  nullopt if the name is not a builtin.
std::optional<OmegaPtr> builtin(const std::string& name);

// JSON document {dim, basis, table: [{i, j, terms: [{k, num, den}]}]}; throws ParseError.
OmegaPtr parse_omega_json(const std::string& text, const std::string& name = "file");
OmegaPtr load_omega_file(const std::string& path);
std::string to_json(const AlgebraSpec& spec);

}  // namespace yangian

#endif  // YANGIAN_OMEGA_HPP
