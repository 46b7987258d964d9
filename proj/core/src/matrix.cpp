#include "pcab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pcab {

double divisor_value(Divisor d, std::size_t n) {
    switch (d) {
    case Divisor::NMinusOne:
        if (n < 2) throw std::invalid_argument("insufficient observations");
        return static_cast<double>(n - 1);
    case Divisor::N:
        return static_cast<double>(n);
    case Divisor::One:
        return 1.0;
    }
    throw std::logic_error("unreachable");
}

std::string divisor_name(Divisor d) {
    switch (d) {
    case Divisor::NMinusOne: return "n-1";
    case Divisor::N: return "n";
    case Divisor::One: return "1";
    }
    return "?";
}

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix data size does not match dimensions");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const double a = (*this)(i, k);
            if (a == 0.0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

Matrix Matrix::scaled(double factor) const {
    Matrix out = *this;
    for (double& v : out.data_) v *= factor;
    return out;
}

Matrix Matrix::left_columns(std::size_t k) const {
    if (k > cols_) throw std::invalid_argument("column count out of range");
    Matrix out(rows_, k);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    return out;
}

std::vector<double> Matrix::column(std::size_t j) const {
    std::vector<double> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<double> Matrix::row(std::size_t i) const {
    std::vector<double> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

Matrix Matrix::column_scaled(const std::vector<double>& factors) const {
    if (factors.size() != cols_)
        throw std::invalid_argument("column scale factor count mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) *= factors[j];
    return out;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](double v) { return std::isfinite(v); });
}

Matrix abs(const Matrix& m) {
    Matrix out = m;
    for (double& v : out.flat()) v = std::abs(v);
    return out;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

namespace {

std::vector<std::string> index_labels(std::size_t count, const char* prefix) {
    std::vector<std::string> labels;
    labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        labels.push_back(prefix + std::to_string(i + 1));
    return labels;
}

void check_unique(const std::vector<std::string>& labels, const char* what) {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw std::invalid_argument(std::string("duplicate ") + what + " labels");
}

} // namespace

DataMatrix::DataMatrix(Matrix values, std::vector<std::string> row_labels,
                       std::vector<std::string> col_labels)
    : values_(std::move(values)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
    if (values_.rows() < 2) throw std::invalid_argument("need at least 2 observations");
    if (values_.cols() < 1) throw std::invalid_argument("need at least 1 feature");
    if (!values_.all_finite()) throw std::invalid_argument("non-finite value in data matrix");
    if (row_labels_.size() != values_.rows())
        throw std::invalid_argument("row label count does not match rows");
    if (col_labels_.size() != values_.cols())
        throw std::invalid_argument("column label count does not match columns");
    check_unique(row_labels_, "row");
    check_unique(col_labels_, "column");
}

DataMatrix::DataMatrix(Matrix values)
    : DataMatrix(Matrix(values), index_labels(values.rows(), "obs"),
                 index_labels(values.cols(), "feat")) {}

bool DataMatrix::is_centered(double tol) const {
    for (double mean : column_means(*this))
        if (std::abs(mean) > tol) return false;
    return true;
}

CovarianceMatrix::CovarianceMatrix(Matrix v, Divisor d) : values(std::move(v)), divisor(d) {
    if (values.rows() != values.cols())
        throw std::invalid_argument("covariance matrix must be square");
    const std::size_t m = values.rows();
    for (std::size_t i = 0; i < m; ++i) {
        if (values(i, i) < -1e-12)
            throw std::invalid_argument("negative variance on covariance diagonal");
        for (std::size_t j = i + 1; j < m; ++j)
            if (std::abs(values(i, j) - values(j, i)) > 1e-12)
                throw std::invalid_argument("matrix not symmetric");
    }
}

DataMatrix center(const DataMatrix& x) {
    const auto means = column_means(x);
    Matrix y = x.values();
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) y(i, j) -= means[j];
    return DataMatrix(std::move(y), x.row_labels(), x.col_labels());
}

std::vector<double> column_means(const DataMatrix& x) {
    const Matrix& v = x.values();
    std::vector<double> means(v.cols(), 0.0);
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) means[j] += v(i, j);
    for (double& m : means) m /= static_cast<double>(v.rows());
    return means;
}

std::vector<double> column_variances(const DataMatrix& x, Divisor divisor) {
    const Matrix& v = x.values();
    const double d = divisor_value(divisor, v.rows());
    const auto means = column_means(x);
    std::vector<double> vars(v.cols(), 0.0);
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) {
            const double dev = v(i, j) - means[j];
            vars[j] += dev * dev;
        }
    for (double& s : vars) s /= d;
    return vars;
}

CovarianceMatrix covariance(const DataMatrix& y, Divisor divisor) {
    if (!y.is_centered()) throw std::invalid_argument("input not centered");
    const Matrix& v = y.values();
    const double d = divisor_value(divisor, v.rows());
    Matrix s(v.cols(), v.cols());
    for (std::size_t a = 0; a < v.cols(); ++a)
        for (std::size_t b = a; b < v.cols(); ++b) {
            double acc = 0.0;
            for (std::size_t i = 0; i < v.rows(); ++i) acc += v(i, a) * v(i, b);
            s(a, b) = s(b, a) = acc / d;
        }
    return CovarianceMatrix(std::move(s), divisor);
}

double mean_relative_difference(std::span<const double> target, std::span<const double> current) {
    if (target.size() != current.size())
        throw std::invalid_argument("mean relative difference: shape mismatch");
    if (target.empty())
        throw std::invalid_argument("mean relative difference: empty input");
    double diff = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        diff += std::abs(target[i] - current[i]);
        scale += std::abs(target[i]);
    }
    if (scale == 0.0) throw std::invalid_argument("relative difference undefined");
    return diff / scale;
}

double mean_relative_difference(const Matrix& target, const Matrix& current) {
    if (target.rows() != current.rows() || target.cols() != current.cols())
        throw std::invalid_argument("mean relative difference: shape mismatch");
    return mean_relative_difference(target.flat(), current.flat());
}

} // namespace pcab
