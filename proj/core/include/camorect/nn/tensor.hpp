#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "camorect/util/rng.hpp"

namespace camorect::nn {

// Dense row-major tensor with value semantics. Rank is dynamic; the common
// layouts in this codebase are (N,C,H,W) for feature maps, (N,T,D) for token
// sequences and (rows,cols) for matrices.
template <typename T>
struct Tensor {
  std::vector<std::int64_t> shape;
  std::vector<T> data;

  Tensor() = default;
  explicit Tensor(std::vector<std::int64_t> s) : shape(std::move(s)) {
    data.assign(static_cast<std::size_t>(numel_of(shape)), T(0));
  }
  Tensor(std::vector<std::int64_t> s, T fill) : shape(std::move(s)) {
    data.assign(static_cast<std::size_t>(numel_of(shape)), fill);
  }

  static std::int64_t numel_of(const std::vector<std::int64_t>& s) {
    std::int64_t n = 1;
    for (auto d : s) n *= d;
    return n;
  }

  std::int64_t numel() const { return static_cast<std::int64_t>(data.size()); }
  int rank() const { return static_cast<int>(shape.size()); }
  std::int64_t dim(int i) const { return shape[static_cast<std::size_t>(i)]; }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  T& operator[](std::int64_t i) { return data[static_cast<std::size_t>(i)]; }
  const T& operator[](std::int64_t i) const { return data[static_cast<std::size_t>(i)]; }

  // 4-D accessor for NCHW tensors.
  T& at(std::int64_t n, std::int64_t c, std::int64_t h, std::int64_t w) {
    return data[static_cast<std::size_t>(((n * shape[1] + c) * shape[2] + h) * shape[3] + w)];
  }
  const T& at(std::int64_t n, std::int64_t c, std::int64_t h, std::int64_t w) const {
    return data[static_cast<std::size_t>(((n * shape[1] + c) * shape[2] + h) * shape[3] + w)];
  }
  // 3-D accessor for (N,T,D) tensors.
  T& at3(std::int64_t n, std::int64_t t, std::int64_t d) {
    return data[static_cast<std::size_t>((n * shape[1] + t) * shape[2] + d)];
  }
  const T& at3(std::int64_t n, std::int64_t t, std::int64_t d) const {
    return data[static_cast<std::size_t>((n * shape[1] + t) * shape[2] + d)];
  }
  // 2-D accessor.
  T& at2(std::int64_t r, std::int64_t c) {
    return data[static_cast<std::size_t>(r * shape[1] + c)];
  }
  const T& at2(std::int64_t r, std::int64_t c) const {
    return data[static_cast<std::size_t>(r * shape[1] + c)];
  }

  Tensor reshaped(std::vector<std::int64_t> s) const {
    if (numel_of(s) != numel()) throw std::invalid_argument("reshape: element count mismatch");
    Tensor out;
    out.shape = std::move(s);
    out.data = data;
    return out;
  }

  void fill(T v) { std::fill(data.begin(), data.end(), v); }

  static Tensor zeros(std::vector<std::int64_t> s) { return Tensor(std::move(s)); }
  static Tensor full(std::vector<std::int64_t> s, T v) { return Tensor(std::move(s), v); }

  static Tensor randn(std::vector<std::int64_t> s, Rng& rng, T scale = T(1)) {
    Tensor t(std::move(s));
    for (auto& v : t.data) v = static_cast<T>(rng.normal()) * scale;
    return t;
  }

  static Tensor rand_uniform(std::vector<std::int64_t> s, Rng& rng, T lo, T hi) {
    Tensor t(std::move(s));
    for (auto& v : t.data) v = static_cast<T>(rng.uniform(lo, hi));
    return t;
  }

  template <typename U>
  Tensor<U> cast() const {
    Tensor<U> out;
    out.shape = shape;
    out.data.resize(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
    return out;
  }

  std::string shape_str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
      s += std::to_string(shape[i]);
      if (i + 1 < shape.size()) s += ",";
    }
    return s + ")";
  }
};

template <typename T>
void require_same_shape(const Tensor<T>& a, const Tensor<T>& b, const char* what) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch " + a.shape_str() +
                                " vs " + b.shape_str());
  }
}

using TensorF = Tensor<float>;
using TensorD = Tensor<double>;

}  // namespace camorect::nn
