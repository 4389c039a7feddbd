#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace clustlda {

struct Vocabulary {
  std::vector<std::string> terms;                    // id -> term
  std::unordered_map<std::string, int> term_to_id;   // term -> id
  std::vector<long long> counts;                     // id -> corpus frequency

  int size() const { return static_cast<int>(terms.size()); }
  // -1 when the term is unknown
  int id_of(const std::string& term) const;
};

struct Document {
  std::string doc_id;
  int author_id = -1;
  std::vector<int> tokens;    // term ids, non-empty
  std::string source_label;   // optional, evaluation only
};

struct Corpus {
  std::vector<Document> documents;
  std::vector<std::string> authors;  // author id -> name
  Vocabulary vocabulary;

  int n_docs() const { return static_cast<int>(documents.size()); }
  int n_authors() const { return static_cast<int>(authors.size()); }
  int vocab_size() const { return vocabulary.size(); }
};

struct RawRecord {
  std::string id;
  std::string author;
  std::string text;
  std::string label;  // empty when absent
};

struct FieldMap {
  std::string id = "id";
  std::string author = "author";
  std::string text = "text";
  std::string label = "label";
};

struct TokenizerOptions {
  std::unordered_set<std::string> stopwords;  // see default_stopwords()
  bool stem = true;
};

// Bundled English stopword list.
const std::unordered_set<std::string>& default_stopwords();

// One word per line, UTF-8; blank lines ignored.
std::unordered_set<std::string> load_stopword_file(const std::string& path);

TokenizerOptions default_tokenizer_options();

// One JSON object per line; blank lines are skipped. Throws on malformed
// lines or missing author/text fields, naming the 1-based line number.
std::vector<RawRecord> load_jsonl(const std::string& path,
                                  const FieldMap& fields = {});

// Lowercase, strip non-alphanumerics, split on whitespace, drop stopwords,
// optionally stem. Empty output is allowed.
std::vector<std::string> tokenize(const std::string& text,
                                  const TokenizerOptions& opts);

// Builds the pruned corpus: vocabulary keeps terms with frequency >=
// min_count (counted after stopword removal and stemming), documents
// emptied by pruning are dropped, authors are re-indexed densely.
// Throws when every document is pruned away.
Corpus build_corpus(const std::vector<RawRecord>& records, int min_count,
                    const TokenizerOptions& opts);

// JSON snapshot round-trip for reproducibility.
std::string corpus_to_json(const Corpus& corpus);
Corpus corpus_from_json(const std::string& text);
void save_corpus_snapshot(const Corpus& corpus, const std::string& path);
Corpus load_corpus_snapshot(const std::string& path);

}  // namespace clustlda
