#pragma once

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "delcode/sblenc.hpp"
#include "delcode/triples.hpp"
#include "delcode/vtcodes.hpp"

namespace delcode {

using json = nlohmann::ordered_json;

// One word per line; a blank line is the empty word. A trailing newline does
// not add a word.
std::vector<Word> read_words(std::istream& in, unsigned q);
void write_words(std::ostream& out, const std::vector<Word>& words);

json to_json(const GoodTripleCert& cert);
json to_json(const CodeParams& params);
json to_json(const DecodeTrace& trace);
json to_json(const EncoderParams& params);

// {"mode", "q", "n", "t", "eps": "p/r", optional "ell", "N", "residues":
//  {"b", "c", "a": {"2": v, ...}}}. Missing ell/N are derived.
CodeParams code_params_from_json(const json& j);
// {"q", "n", "eps"} selects automatically; "eta1", "s", "m" pin the choice.
EncoderParams encoder_params_from_json(const json& j);

}  // namespace delcode
