#include "clp/groups.hpp"

#include <omp.h>

#include <cstdlib>
#include <stdexcept>

namespace clp {

std::string group_spec_name(const GroupSpec& spec) {
    std::string name = family_name(spec.family) + " dim=" + std::to_string(spec.dim) +
                       " q=" + std::to_string(spec.q);
    if (spec.type != FormType::none) name += " type=" + form_type_name(spec.type);
    return name;
}

Integer group_order(const GroupSpec& spec) {
    Integer q(spec.q);
    int d = spec.dim;
    switch (spec.family) {
        case Family::GL: {
            // prod_{i<d} (q^d - q^i)
            Integer qd = ipow(q, d), acc = 1;
            for (int i = 0; i < d; ++i) acc *= qd - ipow(q, i);
            return acc;
        }
        case Family::U: {
            // q^(d(d-1)/2) prod_{i<=d} (q^i - (-1)^i)
            Integer acc = ipow(q, static_cast<unsigned long>(d) * (d - 1) / 2);
            for (int i = 1; i <= d; ++i) acc *= ipow(q, i) - (i % 2 == 0 ? 1 : -1);
            return acc;
        }
        case Family::SP: {
            if (d % 2 != 0) throw std::invalid_argument("group_order: SP needs even dimension");
            int m = d / 2;
            Integer acc = ipow(q, static_cast<unsigned long>(m) * m);
            for (int i = 1; i <= m; ++i) acc *= ipow(q, 2 * i) - 1;
            return acc;
        }
        case Family::O_ODD:
        case Family::O_EVEN: {
            if (d % 2 != 0) {
                // odd dimension: 2 q^(m^2) prod_{i<=m} (q^(2i) - 1)
                int m = (d - 1) / 2;
                Integer acc = 2 * ipow(q, static_cast<unsigned long>(m) * m);
                for (int i = 1; i <= m; ++i) acc *= ipow(q, 2 * i) - 1;
                return acc;
            }
            // even dimension, type eps: 2 q^(m(m-1)) (q^m - eps) prod_{i<m} (q^(2i) - 1)
            int m = d / 2;
            int eps = spec.type == FormType::plus ? 1 : -1;
            if (spec.type == FormType::none)
                throw std::invalid_argument("group_order: even-dimensional O needs a form type");
            Integer acc = 2 * ipow(q, static_cast<unsigned long>(m) * (m - 1));
            acc *= ipow(q, m) - eps;
            for (int i = 1; i < m; ++i) acc *= ipow(q, 2 * i) - 1;
            return acc;
        }
    }
    throw std::logic_error("group_order: unreachable");
}

namespace {

long field_size_of(const GroupSpec& spec) {
    return spec.family == Family::U ? spec.q * spec.q : spec.q;
}

}  // namespace

Integer raw_candidate_count(const GroupSpec& spec) {
    return ipow(Integer(field_size_of(spec)),
                static_cast<unsigned long>(spec.dim) * spec.dim);
}

Integer candidate_budget() {
    if (const char* env = std::getenv("CLP_MAX_CANDIDATES")) {
        Integer v;
        if (v.set_str(env, 10) != 0 || v <= 0)
            throw std::invalid_argument("CLP_MAX_CANDIDATES must be a positive integer");
        return v;
    }
    return ipow(Integer(2), 32);
}

bool within_budget(const GroupSpec& spec) {
    return raw_candidate_count(spec) <= candidate_budget();
}

namespace {

/* Column-by-column depth-first walk of the group.  A candidate column at
 * depth j must pair correctly with every accepted column (through the stored
 * row vectors r_i = c_i^T * form, conjugated entrywise for U), satisfy its
 * own diagonal constraint, and extend the accepted columns to an independent
 * set; the echelon basis makes that last test incremental.  Form
 * preservation forces invertibility, so the independence prune never cuts a
 * valid completion. */
class Enumerator {
public:
    Enumerator(const GroupSpec& gspec, std::function<void(const Mat&)> fn)
        : spec_(standard_form(gspec.family, gspec.dim, gspec.q, gspec.type)),
          F_(*spec_.field),
          dim_(gspec.dim),
          fsize_(F_.size()),
          g_(gspec.dim, gspec.dim),
          fn_(std::move(fn)) {
        basis_.reserve(dim_);
        pivots_.reserve(dim_);
        rvecs_.reserve(dim_);
    }

    void run() { extend(0, -1); }

    /* Restrict the walk to one first-column candidate. */
    void run_first(long v) { extend(0, v); }

    long candidates() const {
        long total = 1;
        for (int i = 0; i < dim_; ++i) total *= fsize_;
        return total;
    }

private:
    void decode(long v, std::vector<std::uint8_t>& col) const {
        for (int i = 0; i < dim_; ++i) {
            col[i] = std::uint8_t(v % fsize_);
            v /= fsize_;
        }
    }

    bool pair_checks(int j, const std::vector<std::uint8_t>& col) const {
        if (spec_.family == Family::GL) return true;  // no pairing constraints
        const Mat& target = spec_.family == Family::O_EVEN ? spec_.bilin : spec_.gram;
        for (int i = 0; i < j; ++i) {
            const auto& r = rvecs_[i];
            std::uint8_t dot = 0;
            for (int k = 0; k < dim_; ++k)
                if (col[k] != 0 && r[k] != 0) dot = F_.add(dot, F_.mul(r[k], col[k]));
            if (dot != target.at(i, j)) return false;
        }
        return true;
    }

    bool self_check(int j, const std::vector<std::uint8_t>& col,
                    std::vector<std::uint8_t>& rvec) const {
        switch (spec_.family) {
            case Family::GL:
                return true;
            case Family::U:
                for (int k = 0; k < dim_; ++k) rvec[k] = F_.conj(col[k]);
                break;
            case Family::SP:
            case Family::O_ODD:
            case Family::O_EVEN: {
                const Mat& form = spec_.family == Family::O_EVEN ? spec_.bilin : spec_.gram;
                for (int k = 0; k < dim_; ++k) {
                    std::uint8_t acc = 0;
                    for (int a = 0; a < dim_; ++a)
                        if (col[a] != 0 && form.at(a, k) != 0)
                            acc = F_.add(acc, F_.mul(col[a], form.at(a, k)));
                    rvec[k] = acc;
                }
                break;
            }
        }
        if (spec_.family == Family::O_EVEN)
            return quad_value(spec_, col) == spec_.quad.at(j, j);
        std::uint8_t dot = 0;
        for (int k = 0; k < dim_; ++k)
            if (col[k] != 0 && rvec[k] != 0) dot = F_.add(dot, F_.mul(rvec[k], col[k]));
        return dot == spec_.gram.at(j, j);
    }

    bool independent_push(const std::vector<std::uint8_t>& col) {
        std::vector<std::uint8_t> red = col;
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            std::uint8_t v = red[pivots_[b]];
            if (v == 0) continue;
            for (int k = 0; k < dim_; ++k) red[k] = F_.sub(red[k], F_.mul(v, basis_[b][k]));
        }
        int pivot = -1;
        for (int k = 0; k < dim_; ++k)
            if (red[k] != 0) {
                pivot = k;
                break;
            }
        if (pivot < 0) return false;
        std::uint8_t scale = F_.inv(red[pivot]);
        for (int k = 0; k < dim_; ++k) red[k] = F_.mul(scale, red[k]);
        pivots_.push_back(pivot);
        basis_.push_back(std::move(red));
        return true;
    }

    void extend(int j, long only) {
        if (j == dim_) {
            fn_(g_);
            return;
        }
        std::vector<std::uint8_t> col(dim_), rvec(dim_);
        long total = candidates();
        long first = only >= 0 ? only : 0;
        long last = only >= 0 ? only + 1 : total;
        for (long v = first; v < last; ++v) {
            decode(v, col);
            if (!pair_checks(j, col)) continue;
            if (!self_check(j, col, rvec)) continue;
            if (!independent_push(col)) continue;
            rvecs_.push_back(rvec);
            for (int k = 0; k < dim_; ++k) g_.at(k, j) = col[k];
            extend(j + 1, -1);
            rvecs_.pop_back();
            basis_.pop_back();
            pivots_.pop_back();
        }
    }

    FormSpec spec_;
    const Field& F_;
    int dim_;
    int fsize_;
    Mat g_;
    std::function<void(const Mat&)> fn_;
    std::vector<std::vector<std::uint8_t>> basis_;
    std::vector<int> pivots_;
    std::vector<std::vector<std::uint8_t>> rvecs_;
};

void check_budget(const GroupSpec& spec) {
    if (!within_budget(spec))
        throw std::invalid_argument("enumeration over budget for " + group_spec_name(spec) +
                                    " (raw space " + raw_candidate_count(spec).get_str() + ")");
}

}  // namespace

void for_each_element(const GroupSpec& spec, const std::function<void(const Mat&)>& fn) {
    check_budget(spec);
    Enumerator(spec, fn).run();
}

std::vector<Mat> collect_elements(const GroupSpec& spec, std::size_t limit) {
    std::vector<Mat> out;
    for_each_element(spec, [&](const Mat& g) {
        if (out.size() >= limit) throw std::length_error("collect_elements: cap exceeded");
        out.push_back(g);
    });
    return out;
}

CountMap jordan_counts_serial(const GroupSpec& spec) {
    check_budget(spec);
    CountMap counts;
    FieldPtr field = standard_form(spec.family, spec.dim, spec.q, spec.type).field;
    Enumerator walker(spec, [&](const Mat& g) { ++counts[jordan_partition_at_1(*field, g)]; });
    walker.run();
    return counts;
}

CountMap jordan_counts(const GroupSpec& spec, int threads) {
    check_budget(spec);
    FieldPtr field = standard_form(spec.family, spec.dim, spec.q, spec.type).field;
    long fsize = spec.family == Family::U ? spec.q * spec.q : spec.q;
    long columns = 1;
    for (int i = 0; i < spec.dim; ++i) columns *= fsize;

    std::vector<CountMap> partial(columns);
#pragma omp parallel for schedule(dynamic) \
    num_threads(threads > 0 ? threads : omp_get_max_threads())
    for (long v = 0; v < columns; ++v) {
        CountMap local;
        Enumerator walker(spec, [&](const Mat& g) { ++local[jordan_partition_at_1(*field, g)]; });
        walker.run_first(v);
        partial[v] = std::move(local);
    }

    CountMap counts;
    for (const CountMap& part : partial)
        for (const auto& [lambda, c] : part) counts[lambda] += c;
    return counts;
}

OracleReport oracle_compare(Family f, int n, long q, int threads) {
    validate_family_q(f, q);
    if (n < 1) throw std::invalid_argument("oracle_compare: requires n >= 1");

    OracleReport report;
    report.family = f;
    report.n = n;
    report.q = q;

    int dim = (f == Family::SP || f == Family::O_EVEN) ? 2 * n : n;
    if (f == Family::O_ODD || f == Family::O_EVEN) {
        report.specs.push_back({f, dim, q, FormType::plus});
        report.specs.push_back({f, dim, q, FormType::minus});
    } else {
        report.specs.push_back({f, dim, q, FormType::none});
    }

    report.orders_match = true;
    std::vector<std::map<Partition, Rational, PartitionOrder>> freqs;
    for (const GroupSpec& spec : report.specs) {
        CountMap counts = jordan_counts(spec, threads);
        Integer total = 0;
        for (const auto& [lambda, c] : counts) total += c;
        report.enumerated_orders.push_back(total);
        Integer expected = group_order(spec);
        if (total != expected) {
            report.orders_match = false;
            if (report.detail.empty())
                report.detail = group_spec_name(spec) + ": enumerated " + total.get_str() +
                                " elements, order formula gives " + expected.get_str();
        }
        std::map<Partition, Rational, PartitionOrder> freq;
        for (const auto& [lambda, c] : counts) freq[lambda] = Rational(Integer(c), total);
        freqs.push_back(std::move(freq));
    }

    // mixture: average the forms' frequencies (a single summand otherwise)
    Rational weight(1, long(report.specs.size()));
    for (const auto& freq : freqs)
        for (const auto& [lambda, r] : freq) {
            auto it = report.empirical.find(lambda);
            if (it == report.empirical.end())
                report.empirical.emplace(lambda, r * weight);
            else
                it->second += r * weight;
        }

    report.predicted = distribution_table(f, n, q, threads);

    report.support_match = true;
    report.values_match = true;
    std::map<Partition, Rational, PartitionOrder> predicted_map;
    for (const auto& [lambda, value] : report.predicted.entries) predicted_map[lambda] = value;
    for (const auto& [lambda, value] : predicted_map) {
        auto it = report.empirical.find(lambda);
        Rational emp = it == report.empirical.end() ? Rational(0) : it->second;
        if ((emp.sign() > 0) != (value.sign() > 0)) {
            report.support_match = false;
            if (report.detail.empty())
                report.detail = "support mismatch at " + lambda.str() + ": empirical " + emp.str() +
                                ", predicted " + value.str();
        }
        if (emp != value) {
            report.values_match = false;
            if (report.detail.empty())
                report.detail = "value mismatch at " + lambda.str() + ": empirical " + emp.str() +
                                ", predicted " + value.str();
        }
    }
    for (const auto& [lambda, emp] : report.empirical) {
        if (!predicted_map.count(lambda)) {
            report.support_match = false;
            report.values_match = false;
            if (report.detail.empty())
                report.detail = "empirical type " + lambda.str() + " (frequency " + emp.str() +
                                ") missing from the predicted table";
        }
    }

    report.pass = report.orders_match && report.support_match && report.values_match;
    return report;
}

}  // namespace clp
