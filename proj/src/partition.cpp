#include "clp/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace clp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
        size_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& s) {
    if (s == "-" || s.empty()) return Partition{};
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("Partition: cannot parse '" + s + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();  // lexicographically descending within a size
}

Partition conjugate(const Partition& p) {
    std::vector<int> dual;
    const auto& parts = p.parts();
    int rows = p.length();
    for (int col = 1; rows > 0; ++col) {
        while (rows > 0 && parts[rows - 1] < col) --rows;
        if (rows > 0) dual.push_back(rows);
    }
    return Partition(std::move(dual));
}

PartitionStats partition_stats(const Partition& p) {
    PartitionStats st;
    st.size = p.size();
    st.length = p.length();
    for (int part : p.parts()) {
        ++st.mult[part];
        if (part % 2 != 0) ++st.odd_parts;
    }
    Partition dual = conjugate(p);
    for (int d : dual.parts()) {
        st.n_stat += static_cast<long>(d) * (d - 1) / 2;
        st.dual_square_sum += static_cast<long>(d) * d;
    }
    return st;
}

bool satisfies(const Partition& p, SupportConstraint c) {
    if (c == SupportConstraint::ALL) return true;
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        bool odd_part = parts[i] % 2 != 0;
        bool odd_mult = (j - i) % 2 != 0;
        if (odd_mult && ((c == SupportConstraint::ODD_PARTS_EVEN_MULT && odd_part) ||
                         (c == SupportConstraint::EVEN_PARTS_EVEN_MULT && !odd_part)))
            return false;
        i = j;
    }
    return true;
}

namespace {

void emit_exact(int remaining, int max_part, std::vector<int>& acc, SupportConstraint c,
                std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p(acc);
        if (satisfies(p, c)) out.push_back(std::move(p));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        emit_exact(remaining - part, part, acc, c, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(SupportConstraint c, int max_size) {
    if (max_size < 0) throw std::invalid_argument("enumerate_partitions: negative size bound");
    std::vector<Partition> out;
    std::vector<int> acc;
    for (int n = 0; n <= max_size; ++n) emit_exact(n, n, acc, c, out);
    return out;
}

std::vector<Partition> enumerate_partitions_exact(SupportConstraint c, int size) {
    if (size < 0) throw std::invalid_argument("enumerate_partitions_exact: negative size");
    std::vector<Partition> out;
    std::vector<int> acc;
    emit_exact(size, size, acc, c, out);
    return out;
}

}  // namespace clp
