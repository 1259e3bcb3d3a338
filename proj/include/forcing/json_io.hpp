#pragma once

// JSON encodings of the value types. Field order in emitted objects is the
// key order of nlohmann::json (sorted), which keeps report digests stable.

#include "forcing/error.hpp"
#include "forcing/poset.hpp"
#include "forcing/variants.hpp"

#include <json.hpp>

namespace forcing
{
    using Json = nlohmann::json;

    void to_json(Json & j, const Condition & c);
    void from_json(const Json & j, Condition & c);

    void to_json(Json & j, const Universe & u);
    [[nodiscard]] auto universe_from_json(const Json & j) -> Universe;

    void to_json(Json & j, const TournamentCondition & t);
    void from_json(const Json & j, TournamentCondition & t);

    void to_json(Json & j, const PartialFnCondition & f);
    void from_json(const Json & j, PartialFnCondition & f);

    /// Reads a required field, turning type errors into ParseError with the field name.
    template <class T>
    auto field(const Json & j, const char * name) -> T
    {
        if (! j.is_object() || ! j.contains(name))
            throw ParseError(std::string("missing field \"") + name + "\"");
        try {
            return j.at(name).get<T>();
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(std::string("field \"") + name + "\": " + e.what());
        }
    }

    template <class T>
    auto field_or(const Json & j, const char * name, T fallback) -> T
    {
        if (! j.is_object() || ! j.contains(name) || j.at(name).is_null())
            return fallback;
        return field<T>(j, name);
    }
}
