#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "oneshot/core/alphabet.hpp"
#include "oneshot/core/network.hpp"

namespace oneshot {

/// Where one vertex function lives in the flat table storage. Rows are
/// indexed by the mixed-radix rank of the input tuple; each row holds
/// `outputs.size()` symbols.
struct VertexTable {
  VertexIndex vertex = 0;
  std::vector<EdgeIndex> inputs;
  std::vector<EdgeIndex> outputs;
  std::size_t offset = 0;
  std::uint64_t rows = 0;

  std::size_t entries() const { return static_cast<std::size_t>(rows) * outputs.size(); }
};

struct CodeLayout {
  std::vector<VertexTable> tables;
  std::vector<std::ptrdiff_t> table_of_vertex;  // -1 for source and terminals
  std::size_t total_entries = 0;
};

/// One function per intermediate vertex. Each table binds its tuple
/// coordinates to concrete edges (in the network's edge order at the time of
/// construction), so the code keeps its meaning if the network is later
/// re-ordered.
class NetworkCode {
 public:
  static constexpr std::size_t kMaxEntries = std::size_t{1} << 26;

  /// All tables filled with symbol 0.
  NetworkCode(const Network& net, Alphabet alphabet) : alphabet_(alphabet) {
    auto layout = std::make_shared<CodeLayout>();
    layout->table_of_vertex.assign(net.vertex_count(), -1);
    for (VertexIndex v : net.intermediates()) {
      VertexTable t;
      t.vertex = v;
      t.inputs.assign(net.in_edges(v).begin(), net.in_edges(v).end());
      t.outputs.assign(net.out_edges(v).begin(), net.out_edges(v).end());
      auto rows = checked_pow(alphabet.size(), t.inputs.size());
      if (!rows || *rows > kMaxEntries || *rows * t.outputs.size() > kMaxEntries - layout->total_entries)
        throw Error(ErrorKind::SearchSpaceTooLarge, "function table for '" + net.vertex_name(v) + "' is too large");
      t.rows = *rows;
      t.offset = layout->total_entries;
      layout->total_entries += t.entries();
      layout->table_of_vertex[v] = static_cast<std::ptrdiff_t>(layout->tables.size());
      layout->tables.push_back(std::move(t));
    }
    data_.assign(layout->total_entries, 0);
    layout_ = std::move(layout);
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const CodeLayout& layout() const noexcept { return *layout_; }
  /// Copies of a code share one layout object.
  const std::shared_ptr<const CodeLayout>& shared_layout() const noexcept { return layout_; }
  std::span<const Symbol> data() const noexcept { return data_; }
  /// Raw table storage, for enumerators that sweep the whole code space.
  std::span<Symbol> mutable_data() noexcept { return data_; }

  bool has_table(VertexIndex v) const {
    return v < layout_->table_of_vertex.size() && layout_->table_of_vertex[v] >= 0;
  }

  const VertexTable& table(VertexIndex v) const {
    if (!has_table(v)) throw Error(ErrorKind::InvalidCode, "no function for vertex index " + std::to_string(v));
    return layout_->tables[static_cast<std::size_t>(layout_->table_of_vertex[v])];
  }

  Word apply(VertexIndex v, std::span<const Symbol> input) const {
    const auto& t = table(v);
    const auto row = row_of(t, input);
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(t.offset + row * t.outputs.size());
    return Word(first, first + static_cast<std::ptrdiff_t>(t.outputs.size()));
  }

  void set(VertexIndex v, std::span<const Symbol> input, std::span<const Symbol> output) {
    const auto& t = table(v);
    if (output.size() != t.outputs.size())
      throw Error(ErrorKind::LengthMismatch, "function output has " + std::to_string(output.size()) + " symbols, expected " +
                                                  std::to_string(t.outputs.size()));
    for (Symbol s : output) check_symbol(s);
    const auto row = row_of(t, input);
    std::copy(output.begin(), output.end(), data_.begin() + static_cast<std::ptrdiff_t>(t.offset + row * t.outputs.size()));
  }

  /// Fills the table of `v` from `f(input) -> Word`, over every input tuple.
  template <class F>
  void assign(VertexIndex v, F&& f) {
    const auto& t = table(v);
    for (std::uint64_t row = 0; row < t.rows; ++row) {
      const Word in = word_unrank(row, alphabet_.size(), t.inputs.size());
      const Word out = f(std::span<const Symbol>(in));
      set(v, in, out);
    }
  }

  friend bool operator==(const NetworkCode& a, const NetworkCode& b) {
    if (a.alphabet_ != b.alphabet_ || a.data_ != b.data_) return false;
    const auto& ta = a.layout_->tables;
    const auto& tb = b.layout_->tables;
    return std::equal(ta.begin(), ta.end(), tb.begin(), tb.end(), [](const VertexTable& x, const VertexTable& y) {
      return x.vertex == y.vertex && x.inputs == y.inputs && x.outputs == y.outputs;
    });
  }

 private:
  void check_symbol(Symbol s) const {
    if (!alphabet_.contains(s))
      throw Error(ErrorKind::SymbolOutOfRange, "symbol " + std::to_string(s) + " outside alphabet of size " +
                                                   std::to_string(alphabet_.size()));
  }

  std::uint64_t row_of(const VertexTable& t, std::span<const Symbol> input) const {
    if (input.size() != t.inputs.size())
      throw Error(ErrorKind::LengthMismatch, "function input has " + std::to_string(input.size()) + " symbols, expected " +
                                                  std::to_string(t.inputs.size()));
    for (Symbol s : input) check_symbol(s);
    return word_rank(input, alphabet_.size());
  }

  Alphabet alphabet_;
  std::shared_ptr<const CodeLayout> layout_;
  std::vector<Symbol> data_;
};

}  // namespace oneshot
