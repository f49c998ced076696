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

#include "altsyl/json.hpp"

#include <cstdio>

namespace altsyl::json {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string expansion(const Expansion& e) {
  std::string s = "{\"q0\": " + e.q0().get_str() + ", \"terms\": [";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ", ";
    s += e.terms()[i].get_str();
  }
  s += "], \"terminated\": ";
  s += e.terminated() ? "true" : "false";
  s += ", \"cseq\": " + quote(e.cseq().render()) + "}";
  return s;
}

std::string report(const TCheckReport& r) {
  std::string s = "{\"valid\": ";
  s += r.valid ? "true" : "false";
  s += ", \"violated\": ";
  s += r.violated ? quote(std::string(condition_name(*r.violated))) : "null";
  s += ", \"index\": ";
  s += r.index ? std::to_string(*r.index) : "null";
  s += ", \"checked_upto\": " + std::to_string(r.checked_upto) + "}";
  return s;
}

std::string enclosure(const Enclosure& e) {
  return "{\"lower\": " + quote(e.lower.to_string()) +
         ", \"upper\": " + quote(e.upper.to_string()) +
         ", \"terms_used\": " + std::to_string(e.terms_used) + "}";
}

std::string undecided(std::size_t index) {
  return "{\"undecided_at\": " + std::to_string(index) + "}";
}

std::string certificate(const Certificate& c) {
  return "{\"l\": " + std::to_string(c.l) + ", \"N\": " + std::to_string(c.N) +
         ", \"head\": " + quote(c.head.to_string()) +
         ", \"checked_prefix\": " + std::to_string(c.checked_prefix) +
         ", \"growth_K\": " + quote(c.growth_K.to_string()) + "}";
}

}  // namespace altsyl::json
