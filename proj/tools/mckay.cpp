// Command-line driver: exact p'-character counts for Borel subgroups of
// finite groups of Lie type in defining characteristic, the Galois action
// on their labels, and the matching global counts for type A.
//
// Exit codes: 0 success, 1 verify failure / I/O error, 2 configuration in
// the exclusion table, 3 valid but unsupported request.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mckay/borel.hpp"
#include "mckay/errors.hpp"
#include "mckay/labels.hpp"
#include "mckay/numtheory.hpp"
#include "mckay/rootdata.hpp"
#include "mckay/selfcheck.hpp"
#include "mckay/ssclasses.hpp"

using json = nlohmann::ordered_json;
using namespace mckay;

namespace {

enum class OutLevel { B, Btilde, Labels, Classes };

const char* level_name(OutLevel l) {
    switch (l) {
    case OutLevel::B: return "B";
    case OutLevel::Btilde: return "Btilde";
    case OutLevel::Labels: return "labels";
    case OutLevel::Classes: return "classes";
    }
    return "?";
}

std::optional<OutLevel> parse_level(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "b") return OutLevel::B;
    if (s == "btilde" || s == "bt" || s == "b~" || s == "b\xcc\x83") return OutLevel::Btilde;
    if (s == "labels") return OutLevel::Labels;
    if (s == "classes") return OutLevel::Classes;
    return std::nullopt;
}

// kappa values in F_p^x whose image in F_q is a square resp. nonsquare;
// deterministic smallest representative per class
struct KappaClass {
    std::string name; // "square" / "nonsquare"
    std::int64_t value;
};

std::vector<KappaClass> kappa_classes(std::int64_t p, int f, const std::string& selector) {
    gf::Field fq(static_cast<std::uint64_t>(p), static_cast<unsigned>(f));
    auto class_of = [&](std::int64_t kappa) {
        return fq.dlog(fq.from_int(kappa)) % 2 == 0 ? std::string("square")
                                                    : std::string("nonsquare");
    };
    std::vector<KappaClass> out;
    if (selector == "all" || selector == "square" || selector == "nonsquare") {
        std::set<std::string> wanted;
        if (selector == "all") wanted = {"square", "nonsquare"};
        else wanted = {selector};
        std::set<std::string> seen;
        for (std::int64_t kappa = 1; kappa < p; ++kappa) {
            auto cls = class_of(kappa);
            if (wanted.count(cls) && !seen.count(cls)) {
                out.push_back({cls, kappa});
                seen.insert(cls);
            }
        }
    } else {
        std::int64_t v = std::stoll(selector);
        if (v % p == 0) throw UnsupportedError("kappa must be a unit mod p");
        v %= p;
        if (v < 0) v += p;
        out.push_back({class_of(v), v});
    }
    return out;
}

struct CountRecord {
    std::uint64_t e;
    KappaClass kappa;
    std::int64_t total;
    std::int64_t fixed;
    // per-central-character breakdown, present only when requested
    std::vector<std::pair<std::string, std::pair<std::int64_t, std::int64_t>>> central;
};

std::string join_key(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ":";
        s += std::to_string(v[i]);
    }
    return s.empty() ? "0" : s;
}

int run_count(char type, int rank, std::int64_t p, int f, int w, const std::string& level_str,
              std::optional<std::uint64_t> e_single, std::uint64_t e_max,
              const std::string& kappa_sel, bool per_central, const std::string& format) {
    auto level = parse_level(level_str);
    if (!level) throw UnsupportedError("unknown level: " + level_str);

    lie::RootSystem rs = lie::root_system(type, rank);
    lie::TwistedGroup tg = lie::twist(std::move(rs), w);
    std::int64_t q = nt::ipow(p, static_cast<std::uint64_t>(f));
    if (auto row = tg.excluded(q)) throw ExcludedError(tg.name(q), *row);
    bool good = lie::is_good_prime(tg.roots, p);

    if ((*level == OutLevel::B || *level == OutLevel::Btilde) && w != 1)
        throw UnsupportedError("the Borel model covers untwisted groups only");
    if (*level == OutLevel::Classes && (type != 'A' || w != 1))
        throw UnsupportedError("the class model covers untwisted type A only");
    if (per_central && *level != OutLevel::B)
        throw UnsupportedError("--per-central applies to level B only");

    std::optional<borel::BorelModel> bm;
    std::optional<labels::LabelSpace> ls;
    std::optional<ssclasses::GlClassModel> cm;
    if (*level == OutLevel::B || *level == OutLevel::Btilde) {
        bm.emplace(tg.roots, p, f);
        if (*level == OutLevel::B && !good) {
            // bad primes are fine at B-level only when the center is trivial
            auto z = zmod::kernel_shape(tg.roots.cartan, q - 1);
            if (z.order() != 1)
                throw UnsupportedError(
                    "B-level counts at a bad prime need a trivial center; " + tg.name(q) +
                    " has center of order " + std::to_string(z.order()));
        }
    } else if (*level == OutLevel::Labels) {
        ls.emplace(tg, p, f);
    } else {
        cm.emplace(rank + 1, p, f);
        ls.emplace(tg, p, f);
    }

    std::uint64_t e_lo = e_single ? *e_single : 0;
    std::uint64_t e_hi = e_single ? *e_single : e_max;
    auto kappas = kappa_classes(p, f, kappa_sel);

    std::vector<CountRecord> records;
    for (std::uint64_t e = e_lo; e <= e_hi; ++e) {
        for (const auto& kc : kappas) {
            labels::GaloisParam g(p, e, kc.value);
            CountRecord rec{e, kc, 0, 0, {}};
            switch (*level) {
            case OutLevel::B:
                rec.total = bm->count_pprime(borel::Level::B);
                rec.fixed = bm->count_sigma_fixed(borel::Level::B, g);
                if (per_central) {
                    auto part = bm->central_partition(g);
                    for (const auto& [key, cell] : part.classes)
                        rec.central.emplace_back(join_key(key), cell);
                }
                break;
            case OutLevel::Btilde:
                rec.total = bm->count_pprime(borel::Level::Btilde);
                rec.fixed = bm->count_sigma_fixed(borel::Level::Btilde, g);
                break;
            case OutLevel::Labels:
                rec.total = ls->size();
                rec.fixed = ls->count_fixed(g);
                break;
            case OutLevel::Classes:
                rec.total = static_cast<std::int64_t>(cm->enumerate().size());
                rec.fixed = cm->count_sigma_fixed(g);
                break;
            }
            records.push_back(std::move(rec));
        }
    }

    std::string note;
    if (w > 1)
        note = "twisted center-order model; oracle-validated for 2A_2 only";

    if (format == "json") {
        json out;
        out["schema"] = 1;
        out["config"] = {{"type", std::string(1, type)}, {"rank", rank}, {"p", p},
                         {"f", f},       {"q", q},        {"w", w},
                         {"level", level_name(*level)},   {"good_prime", good}};
        if (!note.empty()) out["config"]["note"] = note;
        out["records"] = json::array();
        for (const auto& r : records) {
            json jr = {{"e", r.e},
                       {"kappa_class", r.kappa.name},
                       {"kappa", r.kappa.value},
                       {"total", r.total},
                       {"fixed", r.fixed}};
            if (per_central) {
                jr["central"] = json::array();
                for (const auto& [key, cell] : r.central)
                    jr["central"].push_back(
                        {{"character", key}, {"total", cell.first}, {"fixed", cell.second}});
            }
            out["records"].push_back(std::move(jr));
        }
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "e,kappa_class,kappa,central,total,fixed\n";
        for (const auto& r : records) {
            std::cout << r.e << "," << r.kappa.name << "," << r.kappa.value << ",,"
                      << r.total << "," << r.fixed << "\n";
            for (const auto& [key, cell] : r.central)
                std::cout << r.e << "," << r.kappa.name << "," << r.kappa.value << "," << key
                          << "," << cell.first << "," << cell.second << "\n";
        }
    } else {
        std::cout << "config: " << tg.name(q) << " w=" << w << " level=" << level_name(*level)
                  << " good_prime=" << (good ? "yes" : "no") << "\n";
        if (!note.empty()) std::cout << "note: " << note << "\n";
        std::cout << "e kappa_class kappa total fixed\n";
        for (const auto& r : records) {
            std::cout << r.e << " " << r.kappa.name << " " << r.kappa.value << " " << r.total
                      << " " << r.fixed << "\n";
            for (const auto& [key, cell] : r.central)
                std::cout << "  central " << key << " total " << cell.first << " fixed "
                          << cell.second << "\n";
        }
    }
    return 0;
}

int run_verify(const std::string& suite, const std::string& format) {
    auto result = selfcheck::run_suite(suite);
    for (const auto& c : result.checks)
        std::cerr << "[" << c.status << "] " << result.suite << "/" << c.name
                  << (c.detail.empty() ? "" : " - " + c.detail) << "\n";
    if (format == "json" || format.empty()) {
        json out;
        out["schema"] = 1;
        out["suite"] = result.suite;
        out["passed"] = result.passed;
        out["failed"] = result.failed;
        out["skipped"] = result.skipped;
        out["checks"] = json::array();
        for (const auto& c : result.checks) {
            json jc = {{"name", c.name}, {"status", c.status}};
            if (!c.detail.empty()) jc["detail"] = c.detail;
            out["checks"].push_back(std::move(jc));
        }
        std::cout << out.dump(2) << "\n";
    }
    return result.failed == 0 ? 0 : 1;
}

struct ReportRecord {
    char type;
    int rank;
    std::int64_t q;
    std::uint64_t e;
    std::string kappa_class;
    std::int64_t kappa;
    std::string level;
    std::int64_t total = 0, fixed = 0, method_a = 0, method_b = 0, label_count = 0;
    std::optional<std::int64_t> class_count;
};

int run_report(std::vector<std::string> types, std::vector<int> ranks,
               std::vector<std::int64_t> qs, std::uint64_t e_max,
               std::vector<std::string> level_strs, const std::string& csv_path,
               const std::string& json_path) {
    std::sort(types.begin(), types.end());
    std::sort(ranks.begin(), ranks.end());
    std::sort(qs.begin(), qs.end());
    std::vector<OutLevel> levels;
    {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, OutLevel>> order = {
            {"B", OutLevel::B}, {"Btilde", OutLevel::Btilde},
            {"classes", OutLevel::Classes}, {"labels", OutLevel::Labels}};
        for (const auto& s : level_strs) {
            auto l = parse_level(s);
            if (!l) throw UnsupportedError("unknown level: " + s);
            seen.insert(level_name(*l));
        }
        if (level_strs.empty()) seen = {"B", "Btilde", "labels"};
        for (const auto& [name, l] : order)
            if (seen.count(name)) levels.push_back(l);
    }

    std::vector<ReportRecord> records;
    for (const auto& ts : types) {
        char type = ts.empty() ? '?' : ts[0];
        for (int rank : ranks) {
            lie::RootSystem probe;
            try {
                probe = lie::root_system(type, rank);
            } catch (const std::invalid_argument&) {
                continue; // invalid (type, rank) grid point
            }
            for (std::int64_t q : qs) {
                auto pf = nt::as_prime_power(q);
                if (!pf) throw UnsupportedError(std::to_string(q) + " is not a prime power");
                auto [p, f] = *pf;
                lie::TwistedGroup tg = lie::twist(lie::root_system(type, rank), 1);
                if (tg.excluded(q)) continue; // excluded grid points are skipped
                labels::LabelSpace ls(tg, p, f);
                std::optional<borel::BorelModel> bm;
                bool need_borel = false;
                for (auto l : levels)
                    if (l == OutLevel::B || l == OutLevel::Btilde) need_borel = true;
                if (need_borel) bm.emplace(tg.roots, p, f);
                std::optional<ssclasses::GlClassModel> cm;
                if (type == 'A') {
                    try {
                        cm.emplace(rank + 1, p, f);
                    } catch (const UnsupportedError&) {
                        // class model out of desk-scale bounds: column stays empty
                    }
                }
                bool bad_center = false;
                if (!lie::is_good_prime(tg.roots, p))
                    bad_center = zmod::kernel_shape(tg.roots.cartan, q - 1).order() != 1;

                for (std::uint64_t e = 0; e <= e_max; ++e) {
                    for (const auto& kc : kappa_classes(p, f, "all")) {
                        labels::GaloisParam g(p, e, kc.value);
                        for (auto l : levels) {
                            if (l == OutLevel::Classes && !cm) continue;
                            if (l == OutLevel::B && bad_center) continue;
                            ReportRecord r;
                            r.type = type;
                            r.rank = rank;
                            r.q = q;
                            r.e = e;
                            r.kappa_class = kc.name;
                            r.kappa = kc.value;
                            r.level = level_name(l);
                            r.label_count = ls.size();
                            switch (l) {
                            case OutLevel::B:
                                r.total = bm->count_pprime(borel::Level::B);
                                r.method_a = bm->count_sigma_fixed(borel::Level::B, g);
                                r.method_b = bm->count_sigma_fixed_inertia(g);
                                r.fixed = r.method_a;
                                break;
                            case OutLevel::Btilde:
                                r.total = bm->count_pprime(borel::Level::Btilde);
                                r.method_a = bm->count_sigma_fixed(borel::Level::Btilde, g);
                                r.method_b = ls.count_fixed(g);
                                r.fixed = r.method_a;
                                break;
                            case OutLevel::Labels:
                                r.total = ls.size();
                                r.method_a = ls.count_fixed(g);
                                r.method_b = ls.size() <= 4096 ? ls.count_fixed_enumerated(g)
                                                               : r.method_a;
                                r.fixed = r.method_a;
                                break;
                            case OutLevel::Classes:
                                r.total = static_cast<std::int64_t>(cm->enumerate().size());
                                r.method_a = cm->count_sigma_fixed(g);
                                r.method_b = ls.count_fixed(g);
                                r.fixed = r.method_a;
                                break;
                            }
                            if (cm) r.class_count = static_cast<std::int64_t>(cm->enumerate().size());
                            records.push_back(std::move(r));
                        }
                    }
                }
            }
        }
    }

    auto key_of = [](const ReportRecord& r) {
        return std::make_tuple(r.type, r.rank, r.q, r.e, r.kappa_class, r.level);
    };
    std::sort(records.begin(), records.end(),
              [&](const ReportRecord& a, const ReportRecord& b) { return key_of(a) < key_of(b); });

    std::ostringstream csv;
    csv << "type,rank,q,e,kappa_class,kappa,level,total,fixed,method_a,method_b,label_count,"
           "class_count\n";
    for (const auto& r : records) {
        csv << r.type << "," << r.rank << "," << r.q << "," << r.e << "," << r.kappa_class << ","
            << r.kappa << "," << r.level << "," << r.total << "," << r.fixed << "," << r.method_a
            << "," << r.method_b << "," << r.label_count << ","
            << (r.class_count ? std::to_string(*r.class_count) : std::string("-")) << "\n";
    }

    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << csv_path << " for writing\n";
            return 1;
        }
        out << csv.str();
        if (!out.good()) {
            std::cerr << "error: write failed for " << csv_path << "\n";
            return 1;
        }
    }
    if (!json_path.empty()) {
        json out;
        out["schema"] = 1;
        out["config"] = {{"e_max", e_max}};
        out["records"] = json::array();
        for (const auto& r : records) {
            json jr = {{"type", std::string(1, r.type)},
                       {"rank", r.rank},
                       {"q", r.q},
                       {"e", r.e},
                       {"kappa_class", r.kappa_class},
                       {"kappa", r.kappa},
                       {"level", r.level},
                       {"total", r.total},
                       {"fixed", r.fixed},
                       {"method_a", r.method_a},
                       {"method_b", r.method_b},
                       {"label_count", r.label_count}};
            if (r.class_count) jr["class_count"] = *r.class_count;
            out["records"].push_back(std::move(jr));
        }
        std::ofstream jout(json_path, std::ios::binary);
        if (!jout) {
            std::cerr << "error: cannot open " << json_path << " for writing\n";
            return 1;
        }
        jout << out.dump(2) << "\n";
        if (!jout.good()) {
            std::cerr << "error: write failed for " << json_path << "\n";
            return 1;
        }
    }
    if (csv_path.empty() && json_path.empty()) std::cout << csv.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Galois-equivariant p'-character counts in defining characteristic"};
    app.require_subcommand(1);

    // count
    std::string type_str = "A", level = "B", kappa = "all", format = "table";
    int rank = 1, f = 1, w = 1;
    std::int64_t p = 3;
    std::optional<std::uint64_t> e_single;
    std::uint64_t e_max = 0;
    bool per_central = false;
    auto* count = app.add_subcommand("count", "count p'-characters and sigma-fixed points");
    count->add_option("--type", type_str, "series A..G")->required();
    count->add_option("--rank", rank, "rank n")->required();
    count->add_option("--p", p, "characteristic")->required();
    count->add_option("--f", f, "q = p^f")->required();
    count->add_option("--w", w, "order of the diagram twist (1, 2, 3)");
    count->add_option("--level", level, "B | Btilde | labels | classes");
    count->add_option("--e", e_single, "single Galois exponent e");
    count->add_option("--e-max", e_max, "sweep e = 0..e-max (default 2f when unset)");
    count->add_option("--kappa", kappa, "all | square | nonsquare | explicit value");
    count->add_flag("--per-central", per_central, "split by central character (level B)");
    count->add_option("--format", format, "table | csv | json");

    // verify
    std::string suite = "all", vformat = "json";
    auto* verify = app.add_subcommand("verify", "run the desk-scale invariant suites");
    verify->add_option("suite", suite, "fields|linalg|rootdata|labels|borel|global|all")
        ->check(CLI::IsMember(selfcheck::suite_names()));
    verify->add_option("--format", vformat, "json | quiet");

    // report
    std::vector<std::string> r_types, r_levels;
    std::vector<int> r_ranks;
    std::vector<std::int64_t> r_qs;
    std::uint64_t r_emax = 2;
    std::string csv_path, json_path;
    auto* report = app.add_subcommand("report", "grid sweep to CSV/JSON");
    report->add_option("--type", r_types, "series letters (repeatable)");
    report->add_option("--rank", r_ranks, "ranks (repeatable)");
    report->add_option("--q", r_qs, "prime powers (repeatable)");
    report->add_option("--e-max", r_emax, "sweep e = 0..e-max");
    report->add_option("--level", r_levels, "levels (repeatable; default B,Btilde,labels)");
    report->add_option("--csv", csv_path, "CSV output path");
    report->add_option("--json", json_path, "JSON output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count->parsed()) {
            if (!count->count("--e") && !count->count("--e-max"))
                e_max = 2 * static_cast<std::uint64_t>(f);
            return run_count(type_str.empty() ? '?' : type_str[0], rank, p, f, w, level, e_single,
                             e_max, kappa, per_central, format);
        }
        if (verify->parsed()) return run_verify(suite, vformat);
        if (report->parsed())
            return run_report(r_types, r_ranks, r_qs, r_emax, r_levels, csv_path, json_path);
    } catch (const ExcludedError& e) {
        std::cerr << "excluded: " << e.config() << ": " << e.row() << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
