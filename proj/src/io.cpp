#include "heptax/io.hpp"

#include <json.hpp>

#include <fstream>

namespace heptax {

using nlohmann::json;

namespace {

constexpr std::array<const char*, 7> kBandKeys = {"d", "a", "A", "C", "b", "B", "D"};

json rational_to_json(const Rational& v) { return json(v.to_string()); }

Rational rational_from_json(const json& v, const std::string& where) {
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number_unsigned()) return Rational(static_cast<long>(v.get<unsigned long>()));
    throw ParseError(where + ": rational entries must be integers or \"p/q\" strings");
}

double double_from_json(const json& v, const std::string& where) {
    if (v.is_string())
        throw ParseError(where + ": \"" + v.get<std::string>() +
                         "\" is not a float64 value (is the file rational-mode?)");
    if (!v.is_number()) throw ParseError(where + ": expected a number");
    return v.get<double>();
}

template <class S, class FromJson>
std::vector<S> array_from_json(const json& arr, const std::string& where, FromJson conv) {
    if (!arr.is_array()) throw ParseError(where + ": expected an array");
    std::vector<S> out;
    out.reserve(arr.size());
    std::size_t i = 0;
    for (const auto& v : arr) out.push_back(conv(v, where + "[" + std::to_string(i++) + "]"));
    return out;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError(path + ": top level must be an object");
    return doc;
}

void write_json(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << doc.dump(2) << "\n";
}

const json& require(const json& doc, const char* key, const std::string& path) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(path + ": missing \"" + key + "\"");
    return *it;
}

template <class S, class FromJson>
RawSystem<S> system_from_json(const json& doc, const std::string& path, FromJson conv) {
    RawSystem<S> sys;
    const std::string kind = require(doc, "kind", path).get<std::string>();
    if (kind == "cyclic")
        sys.kind = SystemKind::Cyclic;
    else if (kind == "hepta")
        sys.kind = SystemKind::Hepta;
    else
        throw ParseError(path + ": kind must be \"cyclic\" or \"hepta\"");

    const json& order = require(doc, "order", path);
    if (!order.is_number_unsigned() && !order.is_number_integer())
        throw ParseError(path + ": order must be an integer");
    const long long n = order.get<long long>();
    if (n < 0) throw ParseError(path + ": order must be nonnegative");
    sys.order = static_cast<std::size_t>(n);

    const json& bands = require(doc, "bands", path);
    if (!bands.is_object()) throw ParseError(path + ": \"bands\" must be an object");
    std::array<std::vector<S>*, 7> dests = {&sys.d, &sys.a, &sys.A, &sys.C,
                                            &sys.b, &sys.B, &sys.D};
    for (std::size_t i = 0; i < kBandKeys.size(); ++i)
        *dests[i] = array_from_json<S>(require(bands, kBandKeys[i], path),
                                       path + ": bands." + kBandKeys[i], conv);
    sys.rhs = array_from_json<S>(require(doc, "rhs", path), path + ": rhs", conv);
    if (sys.rhs.size() != sys.order)
        throw ParseError(path + ": rhs length " + std::to_string(sys.rhs.size()) +
                         " does not match order " + std::to_string(sys.order));
    // Surface band-shape problems at load time with the file named.
    try {
        if (sys.kind == SystemKind::Cyclic)
            (void)sys.to_cyclic();
        else
            (void)sys.to_hepta();
    } catch (const ValidationError& e) {
        throw ParseError(path + ": " + e.what());
    }
    return sys;
}

template <class S, class ToJson>
json system_to_json(const RawSystem<S>& sys, const char* mode, ToJson conv) {
    json bands = json::object();
    std::array<const std::vector<S>*, 7> srcs = {&sys.d, &sys.a, &sys.A, &sys.C,
                                                 &sys.b, &sys.B, &sys.D};
    for (std::size_t i = 0; i < kBandKeys.size(); ++i) {
        json arr = json::array();
        for (const S& v : *srcs[i]) arr.push_back(conv(v));
        bands[kBandKeys[i]] = std::move(arr);
    }
    json rhs = json::array();
    for (const S& v : sys.rhs) rhs.push_back(conv(v));
    return json{{"kind", sys.kind == SystemKind::Cyclic ? "cyclic" : "hepta"},
                {"order", sys.order},
                {"mode", mode},
                {"bands", std::move(bands)},
                {"rhs", std::move(rhs)}};
}

}  // namespace

SystemFile load_system(const std::string& path) {
    const json doc = load_json(path);
    const std::string mode = require(doc, "mode", path).get<std::string>();
    SystemFile file;
    if (mode == "f64") {
        file.mode = FileMode::F64;
        file.data = system_from_json<double>(doc, path, double_from_json);
    } else if (mode == "rational") {
        file.mode = FileMode::Rational;
        file.data = system_from_json<Rational>(doc, path, rational_from_json);
    } else {
        throw ParseError(path + ": mode must be \"f64\" or \"rational\"");
    }
    return file;
}

void save_system(const std::string& path, const RawSystem<double>& sys) {
    write_json(path, system_to_json(sys, "f64", [](double v) { return json(v); }));
}

void save_system(const std::string& path, const RawSystem<Rational>& sys) {
    write_json(path, system_to_json(sys, "rational", rational_to_json));
}

SolutionFile load_solution(const std::string& path) {
    const json doc = load_json(path);
    const std::string mode = require(doc, "mode", path).get<std::string>();
    const json& x = require(doc, "x", path);
    SolutionFile out;
    if (mode == "f64") {
        out.mode = FileMode::F64;
        out.x = array_from_json<double>(x, path + ": x", double_from_json);
    } else if (mode == "rational") {
        out.mode = FileMode::Rational;
        out.x = array_from_json<Rational>(x, path + ": x", rational_from_json);
    } else {
        throw ParseError(path + ": mode must be \"f64\" or \"rational\"");
    }
    return out;
}

void save_solution(const std::string& path, const std::vector<double>& x) {
    json arr = json::array();
    for (double v : x) arr.push_back(v);
    write_json(path, json{{"mode", "f64"}, {"order", x.size()}, {"x", std::move(arr)}});
}

void save_solution(const std::string& path, const std::vector<Rational>& x) {
    json arr = json::array();
    for (const Rational& v : x) arr.push_back(rational_to_json(v));
    write_json(path, json{{"mode", "rational"}, {"order", x.size()}, {"x", std::move(arr)}});
}

RawSystem<double> to_f64(const RawSystem<Rational>& sys) {
    RawSystem<double> out;
    out.kind = sys.kind;
    out.order = sys.order;
    auto conv = [](const std::vector<Rational>& src) {
        std::vector<double> dst;
        dst.reserve(src.size());
        for (const Rational& v : src) dst.push_back(v.to_double());
        return dst;
    };
    out.d = conv(sys.d);
    out.a = conv(sys.a);
    out.A = conv(sys.A);
    out.C = conv(sys.C);
    out.b = conv(sys.b);
    out.B = conv(sys.B);
    out.D = conv(sys.D);
    out.rhs = conv(sys.rhs);
    return out;
}

RawSystem<Rational> to_exact(const RawSystem<double>& sys) {
    RawSystem<Rational> out;
    out.kind = sys.kind;
    out.order = sys.order;
    auto conv = [](const std::vector<double>& src) {
        std::vector<Rational> dst;
        dst.reserve(src.size());
        for (double v : src) dst.push_back(Rational::from_double(v));
        return dst;
    };
    out.d = conv(sys.d);
    out.a = conv(sys.a);
    out.A = conv(sys.A);
    out.C = conv(sys.C);
    out.b = conv(sys.b);
    out.B = conv(sys.B);
    out.D = conv(sys.D);
    out.rhs = conv(sys.rhs);
    return out;
}

void dump_dense_matrix_market(const std::string& path, const SystemFile& file) {
    const RawSystem<double> sys = file.mode == FileMode::F64
                                      ? std::get<RawSystem<double>>(file.data)
                                      : to_f64(std::get<RawSystem<Rational>>(file.data));
    DenseMatrix<double> dense = sys.kind == SystemKind::Cyclic ? to_dense(sys.to_cyclic())
                                                               : to_dense(sys.to_hepta());
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << "%%MatrixMarket matrix array real general\n";
    out << dense.order << " " << dense.order << "\n";
    out.precision(17);
    for (std::size_t j = 0; j < dense.order; ++j)
        for (std::size_t i = 0; i < dense.order; ++i) out << dense.at(i, j) << "\n";
}

}  // namespace heptax
