#include "stancelab/linguistics.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "stancelab/errors.hpp"
#include "stancelab/util.hpp"

namespace stancelab {

extern const char* const kBundledLinguisticLexicon;

namespace {

std::set<std::string>* category_set(LinguisticLexicon& lex, const std::string& name) {
    if (name == "positive") return &lex.positive;
    if (name == "negative") return &lex.negative;
    if (name == "identity") return &lex.identity;
    if (name == "pronoun") return &lex.pronoun;
    if (name == "first_person") return &lex.first_person;
    if (name == "second_person") return &lex.second_person;
    if (name == "third_person") return &lex.third_person;
    if (name == "family") return &lex.family;
    if (name == "exclusive") return &lex.exclusive;
    if (name == "abusive") return &lex.abusive;
    return nullptr;
}

}  // namespace

LinguisticLexicon LinguisticLexicon::load(std::istream& in, const std::string& what) {
    LinguisticLexicon lex;
    std::set<std::string>* current = nullptr;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[' && t.back() == ']') {
            std::string name = to_lower(trim(t.substr(1, t.size() - 2)));
            current = category_set(lex, name);
            if (!current)
                throw ConfigError(what + ": unknown category '" + name +
                                  "' on line " + std::to_string(lineno));
            continue;
        }
        if (!current)
            throw ConfigError(what + ": term before any [category] on line " +
                              std::to_string(lineno));
        current->insert(to_lower(t));
    }
    // The pronoun category must cover the three person subsets.
    for (const auto* sub : {&lex.first_person, &lex.second_person, &lex.third_person})
        for (const auto& term : *sub)
            if (!lex.pronoun.count(term))
                throw ConfigError(what + ": person pronoun '" + term +
                                  "' missing from [pronoun]");
    return lex;
}

LinguisticLexicon LinguisticLexicon::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open linguistic lexicon: " + path);
    return load(in, path);
}

const LinguisticLexicon& LinguisticLexicon::bundled_default() {
    static const LinguisticLexicon lex = [] {
        std::istringstream in(kBundledLinguisticLexicon);
        return load(in, "bundled linguistic lexicon");
    }();
    return lex;
}

namespace {

bool is_sentence_break(char c) { return c == '.' || c == '?' || c == '!'; }

std::string normalize_token(std::string_view raw) {
    size_t a = 0, b = raw.size();
    auto is_wordchar = [](unsigned char c) { return std::isalnum(c) || c >= 0x80; };
    while (a < b && !is_wordchar(raw[a]) && raw[a] != '#' && raw[a] != '@') ++a;
    while (b > a && !is_wordchar(raw[b - 1])) --b;
    return normalize_tag(raw.substr(a, b - a));
}

}  // namespace

Tokenized tokenize(const std::string& text) {
    Tokenized out;
    std::vector<std::string> sentence;
    std::string word;

    auto flush_word = [&] {
        if (word.empty()) return;
        std::string tok = normalize_token(word);
        word.clear();
        if (tok.empty()) return;
        sentence.push_back(tok);
        out.tokens.push_back(std::move(tok));
    };
    auto flush_sentence = [&] {
        flush_word();
        if (!sentence.empty()) out.sentences.push_back(std::move(sentence));
        sentence.clear();
    };

    for (char c : text) {
        if (is_sentence_break(c)) {
            flush_sentence();
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            flush_word();
        } else {
            word += c;
        }
    }
    flush_sentence();
    return out;
}

int count_syllables(const std::string& word) {
    auto is_vowel = [](char c) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
    };
    int groups = 0;
    bool in_group = false;
    for (char c : word) {
        if (is_vowel(c)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    // Terminal silent 'e': "vaccine" ends a group with a lone 'e'.
    if (groups > 1 && !word.empty()) {
        char last = static_cast<char>(std::tolower(static_cast<unsigned char>(word.back())));
        if (last == 'e' && word.size() >= 2 && !is_vowel(word[word.size() - 2]))
            --groups;
    }
    return std::max(groups, 1);
}

ReadingDifficulty reading_difficulty(const std::string& text) {
    Tokenized tok = tokenize(text);
    if (tok.tokens.empty()) return {0.0, true};
    double sentences = static_cast<double>(std::max<size_t>(tok.sentences.size(), 1));
    double words = static_cast<double>(tok.tokens.size());
    double syllables = 0;
    for (const auto& w : tok.tokens) syllables += count_syllables(w);
    ReadingDifficulty rd;
    rd.value = 0.39 * (words / sentences) + 11.8 * (syllables / words) - 15.59;
    return rd;
}

CueVector extract_cues(const TweetRecord& tweet, const LinguisticLexicon& lexicon) {
    CueVector cues;
    Tokenized tok = tokenize(tweet.text);
    if (tok.tokens.empty()) {
        cues.degenerate = true;
        cues.num_exclamations = static_cast<double>(
            std::count(tweet.text.begin(), tweet.text.end(), '!'));
        return cues;
    }

    double total_len = 0;
    for (const auto& w : tok.tokens) {
        total_len += static_cast<double>(w.size());
        if (lexicon.positive.count(w)) ++cues.positive_sentiment;
        if (lexicon.negative.count(w)) ++cues.negative_sentiment;
        if (lexicon.identity.count(w)) ++cues.num_identities;
        if (lexicon.pronoun.count(w)) ++cues.num_pronouns;
        if (lexicon.first_person.count(w)) ++cues.first_person;
        if (lexicon.second_person.count(w)) ++cues.second_person;
        if (lexicon.third_person.count(w)) ++cues.third_person;
        if (lexicon.family.count(w)) ++cues.num_family;
        if (lexicon.exclusive.count(w)) ++cues.num_exclusive;
        if (lexicon.abusive.count(w)) ++cues.num_abusive;
    }
    cues.num_exclamations = static_cast<double>(
        std::count(tweet.text.begin(), tweet.text.end(), '!'));
    cues.avg_word_length = total_len / static_cast<double>(tok.tokens.size());
    cues.reading_difficulty = reading_difficulty(tweet.text).value;
    return cues;
}

AgentLinguisticProfile aggregate_agent(const AgentTimeline& timeline,
                                       std::span<const CueVector> cues) {
    if (timeline.tweets.empty())
        throw DomainError("agent '" + timeline.agent_id + "' has an empty timeline");
    if (cues.size() != timeline.tweets.size())
        throw DomainError("cue vector count does not match timeline length");

    AgentLinguisticProfile profile;
    profile.tweet_count = static_cast<int>(timeline.tweets.size());
    double n = static_cast<double>(cues.size());
    auto& m = profile.mean;
    for (const auto& c : cues) {
        m.positive_sentiment += c.positive_sentiment;
        m.negative_sentiment += c.negative_sentiment;
        m.num_identities += c.num_identities;
        m.num_pronouns += c.num_pronouns;
        m.first_person += c.first_person;
        m.second_person += c.second_person;
        m.third_person += c.third_person;
        m.num_exclamations += c.num_exclamations;
        m.num_family += c.num_family;
        m.num_exclusive += c.num_exclusive;
        m.num_abusive += c.num_abusive;
        m.avg_word_length += c.avg_word_length;
        m.reading_difficulty += c.reading_difficulty;
    }
    for (double* field :
         {&m.positive_sentiment, &m.negative_sentiment, &m.num_identities,
          &m.num_pronouns, &m.first_person, &m.second_person, &m.third_person,
          &m.num_exclamations, &m.num_family, &m.num_exclusive, &m.num_abusive,
          &m.avg_word_length, &m.reading_difficulty})
        *field /= n;
    return profile;
}

}  // namespace stancelab
