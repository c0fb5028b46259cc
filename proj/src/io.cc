#include <flocks/io.hh>

#include <fstream>

namespace flocks {

json to_json(const Field & field)
{
    return {{"p", field.p()}, {"n", field.n()}, {"modulus", field.modulus()}};
}

Field field_from_json(const json & j)
{
    try {
        std::optional<std::vector<unsigned>> modulus;
        if (j.contains("modulus"))
            modulus = j.at("modulus").get<std::vector<unsigned>>();
        return Field::make(j.at("p").get<unsigned>(), j.at("n").get<unsigned>(), modulus);
    }
    catch (const json::exception & e) {
        throw IoError(std::string("bad field description: ") + e.what());
    }
}

json to_json(const Point2 & p)
{
    return p.coords();
}

json to_json(const Line2 & l)
{
    return l.coords();
}

json to_json(const Point3 & p)
{
    return p.coords();
}

json to_json(const Line3 & l)
{
    return l.rows();
}

json to_json(const PointSet2 & s)
{
    json out = json::array();
    for (const auto & p : s)
        out.push_back(to_json(p));
    return out;
}

json to_json(const Flock & fl)
{
    return {{"field", to_json(fl.field())}, {"f", fl.f()}, {"g", fl.g()}, {"h", fl.h()}};
}

Flock flock_from_json(const json & j)
{
    auto field = field_from_json(j.at("field"));
    try {
        return Flock::make(std::move(field), j.at("f").get<std::vector<Elem>>(), j.at("g").get<std::vector<Elem>>(),
            j.at("h").get<std::vector<Elem>>());
    }
    catch (const json::exception & e) {
        throw IoError(std::string("bad flock description: ") + e.what());
    }
}

json planes_json(const Flock & fl)
{
    json out = json::array();
    for (const auto & v : fl.plane_set())
        out.push_back({v[0], v[1], v[2], -1});
    return out;
}

json to_json(const StabElement & g)
{
    json m = json::array();
    for (std::size_t r = 0; r < 3; ++r)
        m.push_back(g.M.row(r));
    return {{"M", m}, {"d", g.d}, {"j", g.j}};
}

StabElement stab_from_json(const json & j)
{
    try {
        StabElement g;
        const auto rows = j.at("M").get<std::vector<std::vector<Elem>>>();
        if (rows.size() != 3)
            throw IoError("M must have three rows");
        for (std::size_t r = 0; r < 3; ++r) {
            if (rows[r].size() != 3)
                throw IoError("M must have three columns");
            for (std::size_t c = 0; c < 3; ++c)
                g.M(r, c) = rows[r][c];
        }
        g.d = j.at("d").get<Elem>();
        g.j = j.at("j").get<unsigned>();
        return g;
    }
    catch (const json::exception & e) {
        throw IoError(std::string("bad group element: ") + e.what());
    }
}

json to_json(const LinearizedPoly & lp)
{
    return {{"e", lp.e}, {"coeffs", lp.coeffs}};
}

LinearizedPoly linpoly_from_json(const Field & field, const json & j)
{
    try {
        return LinearizedPoly::make(field, j.at("e").get<unsigned>(), j.at("coeffs").get<std::vector<Elem>>());
    }
    catch (const json::exception & e) {
        throw IoError(std::string("bad linearized polynomial: ") + e.what());
    }
}

json to_json(const BlockingSet & b)
{
    json out{{"points", to_json(b.points)}};
    out["redei_line"] = b.redei_line ? to_json(*b.redei_line) : json(nullptr);
    return out;
}

json to_json(const ConeClass & c)
{
    return {{"tag", to_string(c.tag)}, {"width", c.width}, {"size", c.size}};
}

json to_json(const Fingerprint & fp)
{
    json out{{"carrier_size", fp.carrier_size}, {"width", fp.width}, {"width_profile", fp.width_profile},
        {"star_widths", fp.star_widths}, {"linear", fp.linear}, {"star", fp.star}, {"proper", fp.proper},
        {"properly_bilinear", fp.properly_bilinear}};
    out["directions"] = fp.directions ? json(*fp.directions) : json(nullptr);
    return out;
}

Flock read_flock_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in)
        throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    }
    catch (const json::exception & e) {
        throw IoError(path + ": " + e.what());
    }
    return flock_from_json(j);
}

void write_flock_file(const std::string & path, const Flock & fl)
{
    std::ofstream out(path);
    if (! out)
        throw IoError("cannot write " + path);
    out << to_json(fl).dump(2) << '\n';
}

} // namespace flocks
