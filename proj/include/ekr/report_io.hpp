#pragma once

#include "ekr/bounds.hpp"
#include "ekr/search.hpp"
#include "ekr/verify.hpp"

#include <json.hpp>

namespace ekr {

using Json = nlohmann::ordered_json;

/// Counts that fit 64 bits are emitted as JSON numbers, larger ones as
/// decimal strings.
Json count_json(const BigCount &x);
Json family_json(const Family &f);

// Field names and order are frozen; reports double as test fixtures.
Json to_json(const EkrReport &rep);
Json to_json(const HkReport &rep);
Json to_json(const PeelReport &rep);
Json to_json(const SpiderOrderReport &rep);
Json to_json(const Applicability &a);
Json to_json(const SearchSummary &s, SearchKind kind);

} // namespace ekr
