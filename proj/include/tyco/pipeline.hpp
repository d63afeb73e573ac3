#pragma once

// Source directory -> corpus splits -> vocabulary -> aligned id datasets,
// plus the on-disk layout shared by the command-line tools.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tyco/align.hpp"
#include "tyco/bpe.hpp"
#include "tyco/corpus.hpp"

namespace tyco::pipeline {

struct Prepared {
  corpus::Corpus corpus;
  bpe::Vocab vocab;
  std::vector<align::AlignedSample> train, valid, test;
};

inline std::vector<align::AlignedSample> align_all(std::span<const corpus::Sample> samples,
                                                   const bpe::Vocab& vocab) {
  std::vector<align::AlignedSample> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(align::align(s, vocab));
  return out;
}

inline Prepared prepare(std::vector<corpus::SourceFile> sources, const corpus::CorpusConfig& cfg,
                        std::size_t vocab_size) {
  Prepared p;
  p.corpus = corpus::build_corpus(std::move(sources), cfg);
  if (p.corpus.train.samples.empty()) throw ConfigError("no usable training files");
  p.vocab = align::build_vocab(p.corpus.train.samples, p.corpus.tables, vocab_size);
  p.train = align_all(p.corpus.train.samples, p.vocab);
  p.valid = align_all(p.corpus.valid.samples, p.vocab);
  p.test = align_all(p.corpus.test.samples, p.vocab);
  return p;
}

// Layout: corpus text files (see corpus::write_corpus), vocab.json and
// {train,valid,test}.aln.
inline void save(const std::filesystem::path& dir, const Prepared& p) {
  corpus::write_corpus(dir, p.corpus);
  p.vocab.save(dir / "vocab.json");
  const auto h = p.vocab.hash();
  align::write_dataset(dir / "train.aln", p.train, h);
  align::write_dataset(dir / "valid.aln", p.valid, h);
  align::write_dataset(dir / "test.aln", p.test, h);
}

struct Loaded {
  bpe::Vocab vocab;
  corpus::LiteralTables tables;
  std::vector<align::AlignedSample> train, valid, test;
  std::vector<corpus::LineSample> test_lines;
};

inline Loaded load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw IoError("corpus directory not found: " + dir.string());
  Loaded l;
  l.vocab = bpe::Vocab::load(dir / "vocab.json");
  const auto h = l.vocab.hash();
  l.tables = corpus::read_literals(dir);
  l.train = align::read_dataset(dir / "train.aln", h);
  l.valid = align::read_dataset(dir / "valid.aln", h);
  l.test = align::read_dataset(dir / "test.aln", h);
  l.test_lines = corpus::read_line_samples(dir / "test_line.jsonl");
  return l;
}

}  // namespace tyco::pipeline
