// Copyright 2026 The altsyl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ALTSYL_JSON_HPP
#define ALTSYL_JSON_HPP

#include <cstddef>
#include <string>

#include "altsyl/canon.hpp"
#include "altsyl/expansion.hpp"
#include "altsyl/irrational.hpp"
#include "altsyl/realfield.hpp"

// JSON wire formats. Integers are written as exact decimal literals of any
// length; rationals as "p/q" strings.
namespace altsyl::json {

// {"q0": int, "terms": [int...], "terminated": bool, "cseq": "<grammar>"}
std::string expansion(const Expansion& e);
// {"valid": bool, "violated": "C1".."C6"|"U"|"chain"|null,
//  "index": int|null, "checked_upto": int}
std::string report(const TCheckReport& r);
// {"lower": "p/q", "upper": "p/q", "terms_used": int}
std::string enclosure(const Enclosure& e);
// {"undecided_at": k}
std::string undecided(std::size_t index);
// {"l": int, "N": int, "head": "p/q", "checked_prefix": int, "growth_K": "p/q"}
std::string certificate(const Certificate& c);

std::string quote(const std::string& s);

}  // namespace altsyl::json

#endif  // ALTSYL_JSON_HPP
