#pragma once

// Dense linear-algebra kernels behind the forward pass, BPTT and the local
// sensitivity rules. Each kernel exists twice: a serial reference in
// `kernels::serial` and an OpenMP version in `kernels::omp` that splits the
// independent rows (or columns) across threads. Every output element is
// accumulated in the same order by both versions, so results are bit-identical.

#include "drl/matrix.hpp"

#include <span>

namespace drl {

enum class exec_policy { serial, parallel };

namespace kernels {

namespace serial {
/// y += W x. Zero entries of x are skipped when x is mostly zero.
void gemv_acc(const matrix& w, std::span<const double> x, std::span<double> y);
/// y += W^T d.
void gemv_t_acc(const matrix& w, std::span<const double> d, std::span<double> y);
/// W += scale * a b^T.
void rank1_acc(matrix& w, double scale, std::span<const double> a, std::span<const double> b);
/// out[i] += sum_j W(i,j)^2.
void row_sq_norms_acc(const matrix& w, std::span<double> out);
/// W(i,:) += gw[i] * W(i,:) + gx[i] * x.
void row_local_update(matrix& w, std::span<const double> gw, std::span<const double> gx,
                      std::span<const double> x);
/// W += scale * g.
void axpy(matrix& w, double scale, const matrix& g);
}  // namespace serial

namespace omp {
void gemv_acc(const matrix& w, std::span<const double> x, std::span<double> y);
void gemv_t_acc(const matrix& w, std::span<const double> d, std::span<double> y);
void rank1_acc(matrix& w, double scale, std::span<const double> a, std::span<const double> b);
void row_sq_norms_acc(const matrix& w, std::span<double> out);
void row_local_update(matrix& w, std::span<const double> gw, std::span<const double> gx,
                      std::span<const double> x);
void axpy(matrix& w, double scale, const matrix& g);
}  // namespace omp

inline void gemv_acc(exec_policy p, const matrix& w, std::span<const double> x, std::span<double> y)
{
    p == exec_policy::serial ? serial::gemv_acc(w, x, y) : omp::gemv_acc(w, x, y);
}
inline void gemv_t_acc(exec_policy p, const matrix& w, std::span<const double> d, std::span<double> y)
{
    p == exec_policy::serial ? serial::gemv_t_acc(w, d, y) : omp::gemv_t_acc(w, d, y);
}
inline void rank1_acc(exec_policy p, matrix& w, double scale, std::span<const double> a,
                      std::span<const double> b)
{
    p == exec_policy::serial ? serial::rank1_acc(w, scale, a, b) : omp::rank1_acc(w, scale, a, b);
}
inline void row_sq_norms_acc(exec_policy p, const matrix& w, std::span<double> out)
{
    p == exec_policy::serial ? serial::row_sq_norms_acc(w, out) : omp::row_sq_norms_acc(w, out);
}
inline void row_local_update(exec_policy p, matrix& w, std::span<const double> gw,
                             std::span<const double> gx, std::span<const double> x)
{
    p == exec_policy::serial ? serial::row_local_update(w, gw, gx, x)
                             : omp::row_local_update(w, gw, gx, x);
}
inline void axpy(exec_policy p, matrix& w, double scale, const matrix& g)
{
    p == exec_policy::serial ? serial::axpy(w, scale, g) : omp::axpy(w, scale, g);
}

}  // namespace kernels
}  // namespace drl
