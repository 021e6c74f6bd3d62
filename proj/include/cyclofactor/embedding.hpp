#pragma once

#include <memory>
#include <optional>

#include "cyclofactor/field.hpp"

namespace cyclofactor::ff {

/// Field homomorphism sub -> sup sending the class of X in sub to a fixed root
/// of sub's modulus in sup.
class EmbeddingMap {
 public:
  struct Data;

  EmbeddingMap() = default;
  explicit EmbeddingMap(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  Field sub() const;
  Field sup() const;
  const FieldElem& root() const;

  FieldElem apply(const FieldElem& x) const;
  /// The element of sub mapping to y, if y lies in the image.
  std::optional<FieldElem> preimage(const FieldElem& y) const;

 private:
  std::shared_ptr<const Data> d_;
};

/// The root is the coordinate-lex smallest root of sub's modulus in sup.
/// Results are cached per (sub, sup) pair.
EmbeddingMap embed(Field sub, Field sup);

}  // namespace cyclofactor::ff
