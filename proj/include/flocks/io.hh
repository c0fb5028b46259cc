#pragma once

// JSON forms of the library's values. Elements are written as encodings.

#include <flocks/blocking.hh>
#include <flocks/equiv.hh>
#include <flocks/linpoly.hh>

#include <json.hpp>

#include <string>

namespace flocks {

class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

json to_json(const Field & field);
Field field_from_json(const json & j);

json to_json(const Point2 & p);
json to_json(const Line2 & l);
json to_json(const Point3 & p);
json to_json(const Line3 & l);
json to_json(const PointSet2 & s);

/// {"field", "f", "g", "h"}.
json to_json(const Flock & fl);
Flock flock_from_json(const json & j);
/// Sorted [[A,B,C,-1], ...]; the last entry is the literal -1.
json planes_json(const Flock & fl);

json to_json(const StabElement & g);
StabElement stab_from_json(const json & j);

json to_json(const LinearizedPoly & lp);
LinearizedPoly linpoly_from_json(const Field & field, const json & j);

json to_json(const BlockingSet & b);
json to_json(const ConeClass & c);
json to_json(const Fingerprint & fp);

Flock read_flock_file(const std::string & path);
void write_flock_file(const std::string & path, const Flock & fl);

} // namespace flocks
