// klr: batch interface to the quiver Hecke algebra library.
//
// Exit codes: 0 success, 1 datum validation failure, 2 argument error,
// 3 verification failure.

#include "klr/algebra.hpp"
#include "klr/datum.hpp"
#include "klr/qgroup.hpp"
#include "klr/reptheory.hpp"
#include "klr/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidDatum = 1;
constexpr int kExitArgError = 2;
constexpr int kExitVerifyFailed = 3;

struct Options {
    std::string datumPath;
    std::string format = "text";
    long cap = 24;
    int maxHeight = 4;
    int guard = 5;
    int degree = 4;
    unsigned long seed = 7;
    int width = 1;
    std::string checkpoint;
};

klr::SuiteConfig suiteConfig(const Options& opt) {
    klr::SuiteConfig cfg;
    cfg.cap = opt.cap;
    cfg.maxHeight = opt.maxHeight;
    cfg.moduleGuard = opt.guard;
    cfg.testDegree = opt.degree;
    cfg.seed = opt.seed;
    cfg.width = opt.width;
    cfg.checkpointPath = opt.checkpoint;
    return cfg;
}

json seriesJson(const klr::QSeries& s) {
    json coeffs = json::object();
    for (const auto& [e, c] : s.coeffs()) coeffs[std::to_string(e)] = c.get_str();
    return json{{"coefficients", coeffs}, {"cap", s.cap()}, {"floor", s.floorExp()},
                {"text", s.str()}};
}

json reportJson(const klr::SuiteReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json stats = json::object();
    for (const auto& [k, v] : report.stats) stats[k] = v;
    return json{{"suite", report.suite},
                {"datum", report.datumName},
                {"pass", report.allPass()},
                {"checks", checks},
                {"stats", stats}};
}

void printReport(const klr::SuiteReport& report, const std::string& format) {
    if (format == "json") {
        std::cout << reportJson(report).dump(2) << "\n";
        return;
    }
    std::cout << "suite " << report.suite << " on " << report.datumName << "\n";
    for (const auto& c : report.checks) {
        std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
    }
    for (const auto& [k, v] : report.stats) std::cout << "  stat " << k << " = " << v << "\n";
    std::cout << (report.allPass() ? "PASS" : "FAIL") << "\n";
}

// Divided shape grammar: space-separated blocks "i" or "i^(2)".
klr::DividedSequence parseShape(const std::string& text, const klr::BorcherdsCartanDatum& datum) {
    std::vector<std::pair<int, int>> blocks;
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        int n = 1;
        std::string label = tok;
        auto caret = tok.find("^(");
        if (caret != std::string::npos) {
            if (tok.back() != ')') throw std::invalid_argument("bad shape token: " + tok);
            label = tok.substr(0, caret);
            n = std::stoi(tok.substr(caret + 2, tok.size() - caret - 3));
        }
        int pos = datum.positionOf(label);
        if (pos < 0) throw std::invalid_argument("unknown index label: " + label);
        blocks.push_back({pos, n});
    }
    return klr::DividedSequence(blocks, datum);
}

json characterJson(const klr::Character& ch, const klr::BorcherdsCartanDatum& datum) {
    json entries = json::object();
    for (const auto& [seq, p] : ch.entries()) entries[klr::seqStr(seq, datum)] = p.str();
    return entries;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quiver Hecke algebra computations over a Borcherds-Cartan datum"};
    app.require_subcommand(1);

    Options opt;

    auto addCommon = [&](CLI::App* cmd, bool datumRequired = true) {
        cmd->add_option("--format", opt.format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
        auto* o = cmd->add_option("--datum", opt.datumPath, "datum JSON file");
        if (datumRequired) o->required();
        cmd->add_option("--cap", opt.cap, "series truncation cap (default 24)");
        cmd->add_option("--max-height", opt.maxHeight, "sweep guard on ht(nu)");
        cmd->add_option("--guard", opt.guard, "module construction guard");
        cmd->add_option("--degree", opt.degree, "polynomial test degree");
        cmd->add_option("--seed", opt.seed, "random seed for property tests");
        cmd->add_option("--width", opt.width, "parallel task width");
        cmd->add_option("--checkpoint", opt.checkpoint, "checkpoint file for long sweeps");
    };

    auto* cmdValidate = app.add_subcommand("validate", "validate a datum file");
    addCommon(cmdValidate);

    auto* cmdGdim = app.add_subcommand("gdim", "graded dimensions of corners and the center");
    addCommon(cmdGdim);
    std::string seqI, seqJ, shapeText, nuText;
    bool centerFlag = false;
    cmdGdim->add_option("--seq-i,--seq", seqI, "source sequence, e.g. \"i j i\"");
    cmdGdim->add_option("--seq-j", seqJ, "target sequence");
    cmdGdim->add_option("--shape", shapeText, "divided source shape, e.g. \"i^(2) j\"");
    cmdGdim->add_flag("--center", centerFlag, "graded dimension of the center");
    cmdGdim->add_option("--nu", nuText,
                        "weight, e.g. \"i:2,j:1\": full corner table (or the center with --center)");

    auto* cmdVerify = app.add_subcommand("verify", "run a verification suite");
    addCommon(cmdVerify);
    std::string suiteName;
    cmdVerify->add_option("--suite", suiteName, "polyrep | basis-oracle | serre | pairing | modules | mackey | center")
        ->required();

    auto* cmdCharacter = app.add_subcommand("character", "characters of the concrete modules");
    addCommon(cmdCharacter);
    std::string moduleSpec;
    bool probeFlag = false;
    cmdCharacter->add_option("--module", moduleSpec,
                             "\"trivial i n\" | \"lbar i n\" | \"induced i n m\" | \"real i n\"")
        ->required();
    cmdCharacter->add_flag("--probe", probeFlag, "include submodule lattice analysis");
    bool matricesFlag = false;
    cmdCharacter->add_flag("--matrices", matricesFlag, "export the action matrices");

    auto* cmdPair = app.add_subcommand("pair", "bilinear form value against the gdim oracle");
    addCommon(cmdPair);
    cmdPair->add_option("--seq-i", seqI, "first word")->required();
    cmdPair->add_option("--seq-j", seqJ, "second word")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitArgError;
    }

    if (opt.cap < 1) {
        std::cerr << "argument error: --cap must be >= 1\n";
        return kExitArgError;
    }
    if (opt.maxHeight < 0 || opt.maxHeight > 6) {
        std::cerr << "argument error: --max-height must lie in [0, 6]\n";
        return kExitArgError;
    }
    if (opt.guard < 0 || opt.guard > 7) {
        std::cerr << "argument error: --guard must lie in [0, 7]\n";
        return kExitArgError;
    }

    try {
        if (cmdValidate->parsed()) {
            try {
                klr::BorcherdsCartanDatum datum = klr::datumFromFile(opt.datumPath);
                if (opt.format == "json") {
                    std::cout << klr::datumToJsonText(datum) << "\n";
                } else {
                    std::cout << "valid datum with " << datum.rank() << " indices; D = [";
                    for (int t = 0; t < datum.rank(); t++)
                        std::cout << (t ? "," : "") << datum.r(t);
                    std::cout << "]\n";
                }
                return kExitOk;
            } catch (const klr::DatumError& e) {
                json err{{"error", klr::datumErrorName(e.kind)}, {"message", e.what()}};
                std::cout << (opt.format == "json" ? err.dump(2)
                                                   : std::string(klr::datumErrorName(e.kind)) +
                                                         ": " + e.what())
                          << "\n";
                return kExitInvalidDatum;
            }
        }

        klr::BorcherdsCartanDatum datum = klr::datumFromFile(opt.datumPath);
        klr::KlrAlgebra algebra(datum);

        if (cmdGdim->parsed()) {
            if (!centerFlag && !nuText.empty()) {
                // full gdim table of the weight, keyed by sequence pair
                klr::Weight nu = klr::Weight::parse(nuText, datum);
                json table = json::object();
                auto seqs = nu.sequences();
                for (const auto& i : seqs)
                    for (const auto& j : seqs) {
                        klr::QSeries g = algebra.gdimCorner(i, j, opt.cap);
                        table[klr::seqStr(i, datum) + " | " + klr::seqStr(j, datum)] =
                            opt.format == "json" ? seriesJson(g) : json(g.str());
                    }
                json out{{"nu", nu.str(datum)}, {"cap", opt.cap}, {"table", table}};
                if (opt.format == "json") {
                    std::cout << out.dump(2) << "\n";
                } else {
                    std::cout << "gdim table for nu = " << nu.str(datum) << "\n";
                    for (auto& [key, val] : table.items())
                        std::cout << "  1_{" << key << "}: " << val.get<std::string>() << "\n";
                }
                return kExitOk;
            }
            klr::QSeries result;
            std::string what;
            if (centerFlag) {
                if (nuText.empty()) throw std::invalid_argument("--center requires --nu");
                klr::Weight nu = klr::Weight::parse(nuText, datum);
                result = algebra.gdimCenter(nu, opt.cap);
                what = "gdim Z(R(nu)), nu = " + nu.str(datum);
            } else if (!shapeText.empty()) {
                klr::DividedSequence shape = parseShape(shapeText, datum);
                klr::Seq j = klr::seqParse(seqJ, datum);
                result = algebra.gdimDividedCorner(shape, j, opt.cap);
                what = "gdim 1_{" + shape.str(datum) + "} R 1_{" + klr::seqStr(j, datum) + "}";
            } else {
                klr::Seq i = klr::seqParse(seqI, datum);
                klr::Seq j = klr::seqParse(seqJ, datum);
                result = algebra.gdimCorner(i, j, opt.cap);
                what = "gdim 1_{" + klr::seqStr(j, datum) + "} R 1_{" + klr::seqStr(i, datum) + "}";
            }
            if (opt.format == "json") {
                json out{{"what", what}, {"series", seriesJson(result)}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << what << " = " << result.str() << "\n";
            }
            return kExitOk;
        }

        if (cmdVerify->parsed()) {
            klr::SuiteReport report =
                klr::runSuiteByName(suiteName, datum, suiteConfig(opt), opt.datumPath);
            printReport(report, opt.format);
            return report.allPass() ? kExitOk : kExitVerifyFailed;
        }

        if (cmdCharacter->parsed()) {
            std::stringstream ss(moduleSpec);
            std::string kind, label;
            ss >> kind >> label;
            int pos = datum.positionOf(label);
            if (pos < 0) throw std::invalid_argument("unknown index label: " + label);
            json out;
            klr::Character ch;
            if (kind == "trivial") {
                int n;
                ss >> n;
                ch = klr::trivialVCharacter(datum, pos, n);
                out["module"] = "V(" + label + "^" + std::to_string(n) + ")";
            } else if (kind == "real") {
                int n;
                ss >> n;
                ch = klr::charVReal(datum, pos, n);
                out["module"] = "V(" + label + "^" + std::to_string(n) + ") (real)";
            } else if (kind == "lbar" || kind == "induced") {
                int n, m = 0;
                ss >> n;
                if (kind == "induced") ss >> m;
                klr::FinModule mod = (kind == "lbar")
                                         ? klr::lbar(algebra, pos, n, opt.guard)
                                         : klr::inducedTrivials(algebra, pos, n, m, opt.guard);
                ch = klr::characterOf(mod);
                out["module"] = kind;
                out["dimension"] = mod.dim();
                if (probeFlag) {
                    klr::SubmoduleProbe probe = klr::submoduleLatticeProbe(mod);
                    out["probe"] = {{"socleDim", probe.socle.dim()},
                                    {"headDim", probe.headDim},
                                    {"uniqueMaximal", probe.uniqueMaximalCertified},
                                    {"uniqueMinimal", probe.uniqueMinimalCertified},
                                    {"headIsTrivialType", probe.headKilledByGenerators}};
                }
                if (matricesFlag) {
                    auto matJson = [](const klr::RatMat& m) {
                        json rows = json::array();
                        for (const auto& row : m) {
                            json r = json::array();
                            for (const auto& v : row) r.push_back(klr::to_string(v));
                            rows.push_back(r);
                        }
                        return rows;
                    };
                    json dots = json::array(), crossings = json::array();
                    for (int t = 1; t <= mod.strands(); t++) dots.push_back(matJson(mod.dotMatrix(t)));
                    for (int k = 1; k < mod.strands(); k++)
                        crossings.push_back(matJson(mod.crossMatrix(k)));
                    json degs = json::array();
                    for (long dg : mod.degrees()) degs.push_back(dg);
                    out["actions"] = {{"dots", dots}, {"crossings", crossings}, {"degrees", degs}};
                }
            } else {
                throw std::invalid_argument("unknown module kind: " + kind);
            }
            out["character"] = characterJson(ch, datum);
            if (opt.format == "json") std::cout << out.dump(2) << "\n";
            else std::cout << out["module"].get<std::string>() << ": " << ch.str(datum) << "\n";
            return kExitOk;
        }

        if (cmdPair->parsed()) {
            klr::QGroup qgroup(datum);
            klr::Seq i = klr::seqParse(seqI, datum);
            klr::Seq j = klr::seqParse(seqJ, datum);
            klr::PairingValue value = qgroup.pairWords(i, j);
            klr::QSeries quantum = value.expand(opt.cap);
            klr::QSeries gdim = algebra.gdimCorner(j, i, opt.cap);
            auto cert = quantum.equalUpToCommonCap(gdim);
            json out{{"pair", {klr::seqStr(i, datum), klr::seqStr(j, datum)}},
                     {"closedForm", value.str()},
                     {"quantumSide", seriesJson(quantum)},
                     {"algebraSide", seriesJson(gdim)},
                     {"equalToCap", cert ? json(*cert) : json(nullptr)}};
            if (opt.format == "json") {
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "{f_i, f_j} = " << value.str() << "\n  = " << quantum.str() << "\n";
                std::cout << "gdim corner = " << gdim.str() << "\n";
                if (cert) std::cout << "equal to cap " << *cert << "\n";
                else std::cout << "NOT equal\n";
            }
            return cert ? kExitOk : kExitVerifyFailed;
        }
    } catch (const klr::DatumError& e) {
        std::cerr << klr::datumErrorName(e.kind) << ": " << e.what() << "\n";
        return kExitInvalidDatum;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kExitArgError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitArgError;
}
