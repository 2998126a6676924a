#pragma once
// Per-tweet linguistic cue extraction and per-agent mean profiles: the
// endogenous side of the feature vector.

#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "stancelab/records.hpp"

namespace stancelab {

struct LinguisticLexicon {
    std::set<std::string> positive;
    std::set<std::string> negative;
    std::set<std::string> identity;
    std::set<std::string> pronoun;       // superset of the three person sets
    std::set<std::string> first_person;
    std::set<std::string> second_person;
    std::set<std::string> third_person;
    std::set<std::string> family;
    std::set<std::string> exclusive;
    std::set<std::string> abusive;

    static LinguisticLexicon load(std::istream& in, const std::string& what);
    static LinguisticLexicon load_file(const std::string& path);
    static const LinguisticLexicon& bundled_default();
};

struct Tokenized {
    std::vector<std::vector<std::string>> sentences;
    std::vector<std::string> tokens;  // normalized: lowercase, '#'/'@' stripped
};

// Sentences split on runs of [.?!]; tokens on whitespace with surrounding
// punctuation stripped.
Tokenized tokenize(const std::string& text);

// Maximal vowel groups (aeiouy), minus a terminal silent 'e' when another
// group exists; at least 1.
int count_syllables(const std::string& word);

struct ReadingDifficulty {
    double value = 0.0;
    bool degenerate = false;  // set for empty text, where value is 0
};

// 0.39 * words-per-sentence + 11.8 * syllables-per-word - 15.59
ReadingDifficulty reading_difficulty(const std::string& text);

struct CueVector {
    double positive_sentiment = 0;
    double negative_sentiment = 0;
    double num_identities = 0;
    double num_pronouns = 0;
    double first_person = 0;
    double second_person = 0;
    double third_person = 0;
    double num_exclamations = 0;
    double num_family = 0;
    double num_exclusive = 0;
    double num_abusive = 0;
    double avg_word_length = 0;
    double reading_difficulty = 0;
    bool degenerate = false;  // empty text
};

CueVector extract_cues(const TweetRecord& tweet, const LinguisticLexicon& lexicon);

struct AgentLinguisticProfile {
    CueVector mean;
    int tweet_count = 0;
};

// Componentwise arithmetic mean over the timeline's tweets; throws
// DomainError for an empty timeline.
AgentLinguisticProfile aggregate_agent(const AgentTimeline& timeline,
                                       std::span<const CueVector> cues);

}  // namespace stancelab
