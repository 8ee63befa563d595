/*
 * Copyright 2026 The coadinv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "coadinv/json_io.hpp"

#include <stdexcept>
#include <string>

namespace coadinv {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw std::invalid_argument(std::string("field '") + key + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

}  // namespace

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long long>(j.get<long long>()));
    throw std::invalid_argument("rational must be a \"p/q\" string or an integer");
}

json to_json(const Mat& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Mat mat_from_json(const json& j) {
    const std::size_t rows = count_field(j, "rows");
    const std::size_t cols = count_field(j, "cols");
    const json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != rows) {
        throw std::invalid_argument("matrix 'entries' must hold 'rows' arrays");
    }
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != cols) {
            throw std::invalid_argument("matrix row " + std::to_string(i) + " must hold 'cols' entries");
        }
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rat_from_json(row[c]);
    }
    return m;
}

json to_json(const AlgebraKind& kind, const DualPointA& l) {
    return {{"algebra", family_name(kind.family)}, {"n", kind.n}, {"y", to_json(l.y)}, {"vstar", to_json(l.vstar)}};
}

json to_json(const AlgebraKind& kind, const DualPointB& l) {
    return {{"algebra", family_name(kind.family)},
            {"n", kind.n},
            {"y", to_json(l.y)},
            {"wstar", to_json(l.wstar)},
            {"xi", to_json(l.xi)}};
}

json to_json(const AlgebraKind& kind, const DualPointC& l) {
    return {{"algebra", family_name(kind.family)}, {"n", kind.n}, {"y", to_json(l.y)}, {"wstar", to_json(l.wstar)}};
}

json to_json(const GroupElemA& a) { return {{"g", to_json(a.g)}, {"u", to_json(a.u)}}; }

json to_json(const GroupElemB& b) {
    return {{"g", to_json(b.g)}, {"u", to_json(b.u)}, {"vstar", to_json(b.vstar)}};
}

AlgebraKind kind_from_json(const json& j) {
    const json& name = field(j, "algebra");
    if (!name.is_string()) throw std::invalid_argument("field 'algebra' must be a string");
    const Family fam = parse_family(name.get<std::string>());
    const std::size_t n = count_field(j, "n");
    if (n == 0) throw std::invalid_argument("field 'n' must be at least 1");
    return {fam, n};
}

namespace {

void check_n(const AlgebraKind& kind, std::size_t n) {
    if (kind.n != n) {
        throw std::invalid_argument("field 'n' = " + std::to_string(kind.n) + " does not match y of size " +
                                    std::to_string(n));
    }
}

}  // namespace

DualPointA dual_a_from_json(const json& j) {
    const AlgebraKind kind = kind_from_json(j);
    if (kind.family != Family::Aff && kind.family != Family::Isl) {
        throw std::invalid_argument("expected algebra 'aff' or 'isl'");
    }
    DualPointA l(mat_from_json(field(j, "y")), mat_from_json(field(j, "vstar")));
    check_n(kind, l.n());
    if (kind.family == Family::Isl) return DualPointA::traceless(std::move(l.y), std::move(l.vstar));
    return l;
}

DualPointB dual_b_from_json(const json& j) {
    const AlgebraKind kind = kind_from_json(j);
    if (kind.family != Family::Glvv) throw std::invalid_argument("expected algebra 'glvv'");
    DualPointB l(mat_from_json(field(j, "y")), mat_from_json(field(j, "wstar")), mat_from_json(field(j, "xi")));
    check_n(kind, l.n());
    return l;
}

DualPointC dual_c_from_json(const json& j) {
    const AlgebraKind kind = kind_from_json(j);
    if (kind.family != Family::Io && kind.family != Family::Iso) {
        throw std::invalid_argument("expected algebra 'io' or 'iso'");
    }
    DualPointC l(mat_from_json(field(j, "y")), mat_from_json(field(j, "wstar")));
    check_n(kind, l.n());
    return l;
}

GroupElemA group_a_from_json(const json& j) {
    return {mat_from_json(field(j, "g")), mat_from_json(field(j, "u"))};
}

GroupElemB group_b_from_json(const json& j) {
    return {mat_from_json(field(j, "g")), mat_from_json(field(j, "u")), mat_from_json(field(j, "vstar"))};
}

}  // namespace coadinv
