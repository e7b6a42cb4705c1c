/**
 * @file report.hpp
 * @brief Law-check results carrying a reproducible first counterexample.
 */
#pragma once

#include "rbcoalg/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rbcoalg {

/// One nonzero coefficient of a tensor: multi-index plus exact value.
struct SparseEntry {
    std::vector<int> index;
    Rational value;

    bool operator==(const SparseEntry&) const = default;
};

std::vector<SparseEntry> sparse_entries(const Vec& v);
std::vector<SparseEntry> sparse_entries(const Tensor2& t);
std::vector<SparseEntry> sparse_entries(const Tensor3& t);

/// First failing instance of a law: the basis element(s) it fails on and the
/// two sides of the identity there, sparsely.
struct Counterexample {
    std::vector<int> basis;
    std::string detail;
    std::vector<SparseEntry> lhs;
    std::vector<SparseEntry> rhs;

    bool operator==(const Counterexample&) const = default;
};

struct Report {
    std::string check;
    bool pass = true;
    std::optional<Counterexample> counterexample;

    static Report ok(std::string name) { return Report{std::move(name), true, std::nullopt}; }
    static Report fail(std::string name, Counterexample ce) {
        return Report{std::move(name), false, std::move(ce)};
    }
};

}  // namespace rbcoalg
