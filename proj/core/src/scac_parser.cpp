#include "hypermediator/scac_parser.hpp"

#include "hypermediator/errors.hpp"

#include <expat.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace hypermediator {

namespace fs = std::filesystem;

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

std::string_view to_string(IssueCode code) {
  switch (code) {
    case IssueCode::UnknownTag: return "UnknownTag";
    case IssueCode::MissingAttribute: return "MissingAttribute";
    case IssueCode::ConflictingPositionAttributes: return "ConflictingPositionAttributes";
    case IssueCode::EmptyFragmentText: return "EmptyFragmentText";
    case IssueCode::MalformedDocument: return "MalformedDocument";
    case IssueCode::DuplicateArticleId: return "DuplicateArticleId";
    case IssueCode::UnknownAttribute: return "UnknownAttribute";
  }
  return "?";
}

std::size_t ValidationReport::error_count() const {
  return static_cast<std::size_t>(std::ranges::count(issues, Severity::Error, &ParseIssue::severity));
}

std::size_t ValidationReport::warning_count() const {
  return issues.size() - error_count();
}

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

bool iequals_ascii(std::string_view a, std::string_view b) {
  return std::ranges::equal(a, b, [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
  });
}

// Attribute names accepted on each SCAC element; aliases map to the
// canonical (French) name.
struct AttributeSpec {
  std::vector<std::string_view> names;
  std::map<std::string_view, std::string_view> aliases;
};

const AttributeSpec& attribute_spec(TagKind kind) {
  static const std::map<TagKind, AttributeSpec> specs = {
      {TagKind::Identity, {{"id"}, {}}},
      {TagKind::Norm, {{"id"}, {}}},
      {TagKind::Stakes, {{"id"}, {}}},
      {TagKind::Position, {{"holonym", "meronym", "hypernym", "hyponym"}, {}}},
      {TagKind::Relation, {{"a", "b", "type"}, {}}},
      {TagKind::Time, {{"id", "date"}, {}}},
      {TagKind::Spatial, {{"id", "lieu"}, {{"place", "lieu"}}}},
      {TagKind::Quote, {{"id", "auteur", "reference"}, {{"author", "auteur"}}}},
  };
  return specs.at(kind);
}

struct PendingFragment {
  std::size_t sequence = 0;
  TagKind kind = TagKind::Identity;
  TagAttributes attrs;
  Span span;
  SourceLocation location;
};

class ArticleReader {
 public:
  ArticleReader(std::string_view file_stem) : file_stem_(file_stem), article_id_(file_stem) {}

  ArticleParse run(std::string_view source) {
    ArticleParse result;
    if (!is_valid_utf8(source)) {
      report(Severity::Error, first_invalid_utf8(source), IssueCode::MalformedDocument,
             "document is not valid UTF-8");
      result.issues = std::move(issues_);
      return result;
    }

    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
        XML_ParserCreate("UTF-8"), &XML_ParserFree);
    if (!parser) throw Error("cannot allocate XML parser");
    parser_ = parser.get();
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &ArticleReader::on_start, &ArticleReader::on_end);
    XML_SetCharacterDataHandler(parser_, &ArticleReader::on_text);
    XML_SetXmlDeclHandler(parser_, &ArticleReader::on_decl);

    const auto status =
        XML_Parse(parser_, source.data(), static_cast<int>(source.size()), XML_TRUE);
    if (status == XML_STATUS_ERROR && !stopped_) {
      report(Severity::Error,
             {XML_GetCurrentLineNumber(parser_), XML_GetCurrentColumnNumber(parser_) + 1},
             IssueCode::MalformedDocument,
             std::string("XML is not well-formed: ") + XML_ErrorString(XML_GetErrorCode(parser_)));
      rejected_ = true;
    }
    parser_ = nullptr;

    if (!rejected_) finish_document();

    result.article_location = article_location_;
    if (!rejected_) result.article = build_article();
    result.issues = std::move(issues_);
    std::ranges::stable_sort(result.issues, [](const ParseIssue& x, const ParseIssue& y) {
      return std::tie(x.location.line, x.location.column) <
             std::tie(y.location.line, y.location.column);
    });
    return result;
  }

 private:
  enum class Role { Article, Meta, MetaField, Body, Scac, Flattened, Ignored };

  struct Frame {
    Role role = Role::Ignored;
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    SourceLocation location;
    std::size_t body_start = 0;
    std::size_t sequence = 0;
    TagKind kind = TagKind::Identity;
  };

  static void XMLCALL on_decl(void* self, const XML_Char*, const XML_Char* encoding, int) {
    static_cast<ArticleReader*>(self)->declaration(encoding);
  }
  static void XMLCALL on_start(void* self, const XML_Char* name, const XML_Char** atts) {
    static_cast<ArticleReader*>(self)->start(name, atts);
  }
  static void XMLCALL on_end(void* self, const XML_Char*) {
    static_cast<ArticleReader*>(self)->end();
  }
  static void XMLCALL on_text(void* self, const XML_Char* s, int len) {
    static_cast<ArticleReader*>(self)->text(std::string_view(s, static_cast<std::size_t>(len)));
  }

  SourceLocation here() const {
    return {XML_GetCurrentLineNumber(parser_), XML_GetCurrentColumnNumber(parser_) + 1};
  }

  static SourceLocation first_invalid_utf8(std::string_view source) {
    SourceLocation loc{1, 1};
    int32_t i = 0;
    const auto length = static_cast<int32_t>(source.size());
    while (i < length) {
      const int32_t at = i;
      UChar32 c = 0;
      U8_NEXT(source.data(), i, length, c);
      if (c < 0) break;
      if (source[static_cast<std::size_t>(at)] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
    return loc;
  }

  void report(Severity severity, SourceLocation location, IssueCode code, std::string message) {
    issues_.push_back({severity, article_id_, location, code, std::move(message)});
  }

  void reject(SourceLocation location, std::string message) {
    report(Severity::Error, location, IssueCode::MalformedDocument, std::move(message));
    rejected_ = true;
    stopped_ = true;
    XML_StopParser(parser_, XML_FALSE);
  }

  void declaration(const XML_Char* encoding) {
    if (encoding != nullptr && !iequals_ascii(encoding, "UTF-8")) {
      reject(here(), std::string("unsupported encoding \"") + encoding + "\"; only UTF-8 is accepted");
    }
  }

  void start(const XML_Char* name_cstr, const XML_Char** atts) {
    Frame frame;
    frame.name = name_cstr;
    frame.location = here();
    for (std::size_t i = 0; atts[i] != nullptr; i += 2) {
      frame.attributes.emplace_back(atts[i], atts[i + 1]);
    }

    const Role parent = stack_.empty() ? Role::Ignored : stack_.back().role;
    if (stack_.empty()) {
      if (frame.name != "article") {
        reject(frame.location, "root element must be <article>, found <" + frame.name + ">");
        return;
      }
      frame.role = Role::Article;
      article_location_ = frame.location;
      read_article_attributes(frame);
    } else if (parent == Role::Article) {
      if (frame.name == "meta" || frame.name == "body") {
        bool& seen = frame.name == "meta" ? seen_meta_ : seen_body_;
        if (seen) {
          reject(frame.location, "duplicate <" + frame.name + "> element");
          return;
        }
        seen = true;
        frame.role = frame.name == "meta" ? Role::Meta : Role::Body;
      } else {
        report(Severity::Warning, frame.location, IssueCode::UnknownTag,
               "unknown element <" + frame.name + "> ignored");
        frame.role = Role::Ignored;
      }
    } else if (parent == Role::Meta) {
      if (frame.name == "title" || frame.name == "author" || frame.name == "year" ||
          frame.name == "theme") {
        frame.role = Role::MetaField;
        field_buffer_.clear();
      } else {
        report(Severity::Warning, frame.location, IssueCode::UnknownTag,
               "unknown element <" + frame.name + "> in <meta> ignored");
        frame.role = Role::Ignored;
      }
    } else if (parent == Role::MetaField) {
      report(Severity::Warning, frame.location, IssueCode::UnknownTag,
             "element <" + frame.name + "> inside a metadata field treated as text");
      frame.role = Role::MetaField;
      ++nested_field_depth_;
    } else if (parent == Role::Body || parent == Role::Scac || parent == Role::Flattened) {
      if (auto kind = tag_kind_from_element(frame.name)) {
        frame.role = Role::Scac;
        frame.kind = *kind;
        frame.body_start = body_.size();
        frame.sequence = next_sequence_++;
      } else {
        report(Severity::Warning, frame.location, IssueCode::UnknownTag,
               "unknown element <" + frame.name + "> treated as plain text");
        frame.role = Role::Flattened;
      }
    } else {
      frame.role = Role::Ignored;
    }
    stack_.push_back(std::move(frame));
  }

  void end() {
    if (stack_.empty()) return;
    Frame frame = std::move(stack_.back());
    stack_.pop_back();
    switch (frame.role) {
      case Role::MetaField:
        if (nested_field_depth_ > 0) {
          --nested_field_depth_;
        } else {
          store_meta_field(frame);
        }
        break;
      case Role::Scac:
        close_fragment(frame);
        break;
      default:
        break;
    }
  }

  void text(std::string_view chunk) {
    if (stack_.empty()) return;
    switch (stack_.back().role) {
      case Role::Body:
      case Role::Scac:
      case Role::Flattened:
        body_.append(chunk);
        break;
      case Role::MetaField:
        field_buffer_.append(chunk);
        break;
      default:
        break;
    }
  }

  void read_article_attributes(const Frame& frame) {
    for (const auto& [name, value] : frame.attributes) {
      if (name == "id") {
        if (trim(value).empty()) {
          report(Severity::Warning, frame.location, IssueCode::MissingAttribute,
                 "empty id attribute on <article>; using file name \"" + file_stem_ + "\"");
        } else {
          article_id_ = std::string(trim(value));
          for (ParseIssue& issue : issues_) issue.article_id = article_id_;
        }
      } else {
        report(Severity::Warning, frame.location, IssueCode::UnknownAttribute,
               "unknown attribute \"" + name + "\" on <article>");
      }
    }
  }

  void store_meta_field(const Frame& frame) {
    const std::string value(trim(field_buffer_));
    field_buffer_.clear();
    if (frame.name == "title") {
      if (title_) {
        report(Severity::Warning, frame.location, IssueCode::UnknownTag,
               "repeated <title>; first one kept");
      } else {
        title_ = value;
        title_location_ = frame.location;
      }
    } else if (frame.name == "author") {
      if (value.empty()) {
        report(Severity::Warning, frame.location, IssueCode::EmptyFragmentText,
               "empty <author> ignored");
      } else {
        authors_.push_back(value);
      }
    } else if (frame.name == "year") {
      int year = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), year);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        report(Severity::Warning, frame.location, IssueCode::MalformedDocument,
               "<year> is not an integer: \"" + value + "\"");
      } else {
        year_ = year;
      }
    } else if (frame.name == "theme") {
      if (!value.empty()) theme_ = value;
    }
  }

  // Looks up `name` (or one of its aliases) among the element's attributes.
  const std::string* attribute(const Frame& frame, std::string_view name) const {
    for (const auto& [key, value] : frame.attributes) {
      if (key == name) return &value;
    }
    const AttributeSpec& spec = attribute_spec(frame.kind);
    for (const auto& [alias, canonical] : spec.aliases) {
      if (canonical != name) continue;
      for (const auto& [key, value] : frame.attributes) {
        if (key == alias) return &value;
      }
    }
    return nullptr;
  }

  void close_fragment(const Frame& frame) {
    bool ok = true;
    auto fail = [&](IssueCode code, std::string message) {
      report(Severity::Error, frame.location, code, std::move(message));
      ok = false;
    };
    const std::string tag = "<" + frame.name + ">";

    const AttributeSpec& spec = attribute_spec(frame.kind);
    for (const auto& [key, value] : frame.attributes) {
      const bool known = std::ranges::find(spec.names, key) != spec.names.end();
      const auto alias = spec.aliases.find(key);
      if (alias != spec.aliases.end()) {
        const bool canonical_present = std::ranges::any_of(
            frame.attributes, [&](const auto& kv) { return kv.first == alias->second; });
        if (canonical_present) {
          report(Severity::Warning, frame.location, IssueCode::UnknownAttribute,
                 "attribute \"" + key + "\" on " + tag + " ignored; \"" +
                     std::string(alias->second) + "\" takes precedence");
        }
      } else if (!known) {
        report(Severity::Warning, frame.location, IssueCode::UnknownAttribute,
               "unknown attribute \"" + key + "\" on " + tag);
      }
    }

    auto concept_attr = [&](std::string_view name) -> ConceptId {
      const std::string* raw = attribute(frame, name);
      if (raw == nullptr) {
        fail(IssueCode::MissingAttribute, tag + " requires attribute \"" + std::string(name) + "\"");
        return {};
      }
      try {
        return ConceptId::normalize(*raw);
      } catch (const InvalidConceptId&) {
        fail(IssueCode::MissingAttribute,
             "attribute \"" + std::string(name) + "\" on " + tag + " is empty");
        return {};
      }
    };
    auto text_attr = [&](std::string_view name) -> std::string {
      const std::string* raw = attribute(frame, name);
      if (raw == nullptr) {
        fail(IssueCode::MissingAttribute, tag + " requires attribute \"" + std::string(name) + "\"");
        return {};
      }
      return *raw;
    };

    TagAttributes attrs;
    switch (frame.kind) {
      case TagKind::Identity:
      case TagKind::Norm:
      case TagKind::Stakes:
        attrs = SubjectAttrs{concept_attr("id")};
        break;
      case TagKind::Position: {
        const bool part_whole = attribute(frame, "holonym") || attribute(frame, "meronym");
        const bool specification = attribute(frame, "hypernym") || attribute(frame, "hyponym");
        if (part_whole && specification) {
          fail(IssueCode::ConflictingPositionAttributes,
               tag + " carries both holonym/meronym and hypernym/hyponym attributes");
        } else if (part_whole) {
          attrs = PartWholeAttrs{concept_attr("holonym"), concept_attr("meronym")};
        } else if (specification) {
          attrs = SpecificationAttrs{concept_attr("hypernym"), concept_attr("hyponym")};
        } else {
          fail(IssueCode::MissingAttribute,
               tag + " requires either holonym/meronym or hypernym/hyponym attributes");
        }
        break;
      }
      case TagKind::Relation: {
        ConceptId a = concept_attr("a");
        ConceptId b = concept_attr("b");
        attrs = RelationAttrs{std::move(a), std::move(b), text_attr("type")};
        break;
      }
      case TagKind::Time: {
        ConceptId id = concept_attr("id");
        attrs = TimeAttrs{std::move(id), text_attr("date")};
        break;
      }
      case TagKind::Spatial: {
        ConceptId id = concept_attr("id");
        attrs = SpatialAttrs{std::move(id), text_attr("lieu")};
        break;
      }
      case TagKind::Quote: {
        ConceptId id = concept_attr("id");
        std::string author = text_attr("auteur");
        attrs = QuoteAttrs{std::move(id), std::move(author), text_attr("reference")};
        break;
      }
    }

    const Span span{frame.body_start, body_.size()};
    if (is_blank(std::string_view(body_).substr(span.begin))) {
      fail(IssueCode::EmptyFragmentText, tag + " has no text content");
    }
    if (ok) {
      fragments_.push_back({frame.sequence, frame.kind, std::move(attrs), span, frame.location});
    }
  }

  void finish_document() {
    const SourceLocation at = article_location_;
    if (!seen_meta_) {
      report(Severity::Error, at, IssueCode::MalformedDocument, "missing <meta> element");
      rejected_ = true;
    } else {
      if (!title_ || title_->empty()) {
        report(Severity::Error, title_ ? title_location_ : at, IssueCode::MalformedDocument,
               "missing or empty <title>");
        rejected_ = true;
      }
      if (authors_.empty()) {
        report(Severity::Error, at, IssueCode::MalformedDocument, "at least one <author> is required");
        rejected_ = true;
      }
    }
    if (!seen_body_) {
      report(Severity::Error, at, IssueCode::MalformedDocument, "missing <body> element");
      rejected_ = true;
    }
  }

  Article build_article() {
    Article article;
    article.meta = {article_id_, title_.value_or(""), authors_, year_, theme_};
    article.body = std::move(body_);

    std::ranges::sort(fragments_, {}, &PendingFragment::sequence);
    std::map<std::string, std::size_t> seen_keys;
    for (PendingFragment& pending : fragments_) {
      Fragment fragment;
      fragment.article_id = article_id_;
      fragment.kind = pending.kind;
      fragment.attrs = std::move(pending.attrs);
      fragment.span = pending.span;
      fragment.text = article.body.substr(pending.span.begin, pending.span.size());
      fragment.location = pending.location;
      fragment.fragment_id = fragment_key(fragment);
      // Same kind over the same span: suffix later occurrences to keep ids unique.
      const std::size_t n = ++seen_keys[fragment.fragment_id];
      if (n > 1) fragment.fragment_id += "#" + std::to_string(n);
      article.fragments.push_back(std::move(fragment));
    }
    return article;
  }

  XML_Parser parser_ = nullptr;
  std::string file_stem_;
  std::string article_id_;
  std::vector<ParseIssue> issues_;
  std::vector<Frame> stack_;
  bool stopped_ = false;
  bool rejected_ = false;
  bool seen_meta_ = false;
  bool seen_body_ = false;
  SourceLocation article_location_{1, 1};

  std::string field_buffer_;
  std::size_t nested_field_depth_ = 0;
  std::optional<std::string> title_;
  SourceLocation title_location_;
  std::vector<std::string> authors_;
  std::optional<int> year_;
  std::optional<std::string> theme_;

  std::string body_;
  std::size_t next_sequence_ = 0;
  std::vector<PendingFragment> fragments_;
};

struct SourceFile {
  fs::path path;
  std::optional<std::string> bytes;
};

}  // namespace

ArticleParse parse_article(std::string_view source, std::string_view file_stem) {
  return ArticleReader(file_stem).run(source);
}

CorpusParse parse_corpus(const fs::path& directory) {
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw Error("corpus directory not found: " + directory.string());
  }

  std::vector<SourceFile> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (entry.path().extension() == ".xml" && !entry.is_directory()) {
      files.push_back({entry.path(), std::nullopt});
    }
  }
  if (files.empty()) {
    throw EmptyCorpus("no .xml article files in " + directory.string());
  }
  std::ranges::sort(files, {}, [](const SourceFile& f) { return f.path.filename().string(); });

  for (SourceFile& file : files) {
    std::ifstream in(file.path, std::ios::binary);
    if (!in) continue;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) continue;
    file.bytes = std::move(buffer).str();
  }

  std::vector<std::future<ArticleParse>> jobs;
  jobs.reserve(files.size());
  for (const SourceFile& file : files) {
    if (!file.bytes) {
      jobs.push_back({});
      continue;
    }
    jobs.push_back(std::async(std::launch::async, [&file] {
      return parse_article(*file.bytes, file.path.stem().string());
    }));
  }

  CorpusParse result;
  std::vector<Article> articles;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::string stem = files[i].path.stem().string();
    if (!jobs[i].valid()) {
      result.report.issues.push_back({Severity::Error, stem, {}, IssueCode::MalformedDocument,
                                      "cannot read file " + files[i].path.string()});
      continue;
    }
    ArticleParse parsed = jobs[i].get();
    std::ranges::move(parsed.issues, std::back_inserter(result.report.issues));
    if (!parsed.article) continue;
    if (!ids.insert(parsed.article->meta.article_id).second) {
      result.report.issues.push_back(
          {Severity::Error, parsed.article->meta.article_id, parsed.article_location,
           IssueCode::DuplicateArticleId,
           "article id \"" + parsed.article->meta.article_id + "\" already used; " +
               files[i].path.filename().string() + " skipped"});
      continue;
    }
    articles.push_back(std::move(*parsed.article));
  }

  result.corpus = Corpus(std::move(articles));
  result.report.articles_parsed = result.corpus.articles().size();
  result.report.counts = result.corpus.fragment_counts();
  std::ranges::stable_sort(result.report.issues, [](const ParseIssue& x, const ParseIssue& y) {
    return std::tie(x.article_id, x.location.line, x.location.column) <
           std::tie(y.article_id, y.location.line, y.location.column);
  });
  return result;
}

ValidationReport validate(const fs::path& directory) {
  return parse_corpus(directory).report;
}

}  // namespace hypermediator
