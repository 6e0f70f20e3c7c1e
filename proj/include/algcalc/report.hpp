#pragma once

#include <json.hpp>  // single-header JSON library, shipped under vendor/
#include <string>
#include <vector>

#include "hopf.hpp"  // CheckReport
#include "rational.hpp"

// Deterministic result reports: the same invocation on the same inputs
// renders byte-identical text and JSON.  No timestamps, no addresses, no
// hash-order iteration anywhere.

namespace algcalc {

/// Fixed default seed for every randomized property check; reports always
/// embed the seed they used.
inline constexpr unsigned long kDefaultSeed = 12345;

struct ReportRow {
    enum Kind { kInfo, kCheck };
    Kind kind = kInfo;
    std::string label;
    std::string value;    // info: free text; check: "PASS" or "FAIL"
    std::string witness;  // optional detail, shown in parentheses

    static ReportRow info(std::string label, std::string value) {
        return {kInfo, std::move(label), std::move(value), ""};
    }
    static ReportRow check(std::string label, bool pass, std::string witness = "") {
        return {kCheck, std::move(label), pass ? "PASS" : "FAIL",
                std::move(witness)};
    }
};

struct ReportSection {
    std::string title;
    std::vector<ReportRow> rows;
};

struct Report {
    std::string command;   // normalized echo of the invocation
    std::string instance;  // instance label ("" when none applies)
    std::string detail;    // one-line instance description
    unsigned long seed = kDefaultSeed;
    std::vector<ReportSection> sections;
    int status = 0;  // 0 pass, 1 at least one FAIL row

    ReportSection& add_section(const std::string& title) {
        sections.push_back(ReportSection{title, {}});
        return sections.back();
    }

    void add_info(ReportSection& sec, std::string label, std::string value) {
        sec.rows.push_back(ReportRow::info(std::move(label), std::move(value)));
    }

    void add_check(ReportSection& sec, std::string label, bool pass,
                   std::string witness = "") {
        if (!pass) status = 1;
        sec.rows.push_back(
            ReportRow::check(std::move(label), pass, std::move(witness)));
    }

    /// Append every item of a law-check report as check rows.
    void add_checks(ReportSection& sec, const CheckReport& cr) {
        for (const auto& it : cr.items) add_check(sec, it.law, it.pass, it.witness);
    }

    std::string render_text() const {
        constexpr std::size_t kAlign = 56;
        std::string out;
        out += "algcalc report\n";
        out += "command: " + command + "\n";
        if (!instance.empty()) {
            out += "instance: " + instance;
            if (!detail.empty()) out += " (" + detail + ")";
            out += "\n";
        }
        out += "seed: " + std::to_string(seed) + "\n";
        for (const auto& sec : sections) {
            out += "\n[" + sec.title + "]\n";
            for (const auto& row : sec.rows) {
                if (row.kind == ReportRow::kInfo) {
                    out += "  " + row.label + ": " + row.value + "\n";
                } else {
                    out += "  " + row.label + " ";
                    std::size_t used = 2 + row.label.size() + 1;
                    while (used < kAlign) {
                        out += ".";
                        ++used;
                    }
                    out += " " + row.value;
                    if (!row.witness.empty()) out += "  (" + row.witness + ")";
                    out += "\n";
                }
            }
        }
        out += "\nstatus: ";
        out += (status == 0) ? "PASS" : "FAIL";
        out += "\n";
        return out;
    }

    nlohmann::ordered_json render_json() const {
        nlohmann::ordered_json j;
        j["tool"] = "algcalc";
        j["command"] = command;
        j["instance"] = instance;
        j["detail"] = detail;
        j["seed"] = seed;
        nlohmann::ordered_json secs = nlohmann::ordered_json::array();
        for (const auto& sec : sections) {
            nlohmann::ordered_json s;
            s["title"] = sec.title;
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto& row : sec.rows) {
                nlohmann::ordered_json r;
                r["kind"] = (row.kind == ReportRow::kInfo) ? "info" : "check";
                r["label"] = row.label;
                r["value"] = row.value;
                if (!row.witness.empty()) r["witness"] = row.witness;
                rows.push_back(r);
            }
            s["rows"] = rows;
            secs.push_back(s);
        }
        j["sections"] = secs;
        j["status"] = (status == 0) ? "PASS" : "FAIL";
        j["exit"] = status;
        return j;
    }

    /// Final serialized form for the chosen --format value.
    std::string render(const std::string& format) const {
        if (format == "json") return render_json().dump(2) + "\n";
        return render_text();
    }
};

}  // namespace algcalc
