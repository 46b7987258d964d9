#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pcab {

/// Denominator used when turning sums of squares into (co)variances.
enum class Divisor { NMinusOne, N, One };

double divisor_value(Divisor d, std::size_t n);
std::string divisor_name(Divisor d);

/// Dense row-major matrix of doubles. Small, value-semantic, no views.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> flat() const { return data_; }
    std::span<double> flat() { return data_; }

    Matrix transposed() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix scaled(double factor) const;

    /// Keeps the first k columns.
    Matrix left_columns(std::size_t k) const;
    std::vector<double> column(std::size_t j) const;
    std::vector<double> row(std::size_t i) const;

    /// Multiplies column j by factors[j].
    Matrix column_scaled(const std::vector<double>& factors) const;

    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix abs(const Matrix& m);
Matrix subtract(const Matrix& a, const Matrix& b);

/// Labeled n x m observation matrix. Raw X or centered Y, n >= 2, all finite.
class DataMatrix {
public:
    DataMatrix(Matrix values, std::vector<std::string> row_labels,
               std::vector<std::string> col_labels);
    /// Labels default to 1-based row/column indices.
    explicit DataMatrix(Matrix values);

    const Matrix& values() const { return values_; }
    std::size_t n_rows() const { return values_.rows(); }
    std::size_t n_cols() const { return values_.cols(); }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    bool is_centered(double tol = 1e-9) const;

private:
    Matrix values_;
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
};

/// Symmetric m x m matrix together with the divisor that produced it.
struct CovarianceMatrix {
    Matrix values;
    Divisor divisor = Divisor::NMinusOne;

    CovarianceMatrix(Matrix values, Divisor divisor);
    std::size_t size() const { return values.rows(); }
};

DataMatrix center(const DataMatrix& x);
std::vector<double> column_means(const DataMatrix& x);
std::vector<double> column_variances(const DataMatrix& x, Divisor divisor);

/// (1/d) Y^T Y. Rejects input whose column means exceed 1e-9 in magnitude.
CovarianceMatrix covariance(const DataMatrix& y, Divisor divisor);

/// mean(|target - current|) / mean(|target|), flattened row-major.
double mean_relative_difference(std::span<const double> target, std::span<const double> current);
double mean_relative_difference(const Matrix& target, const Matrix& current);

} // namespace pcab
