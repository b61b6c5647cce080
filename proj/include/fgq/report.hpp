#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fgq/word.hpp"

namespace fgq {

using jsonval = nlohmann::ordered_json;

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;

    friend bool operator==(const Check&, const Check&) = default;
};

/// Outcome of one command or certificate: the inputs echoed in canonical text
/// form plus a list of named checks. The verdict is pass iff every check
/// passed; it is never stored independently, so a report cannot claim a
/// verdict its checks do not support.
class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    const std::string& command() const { return command_; }
    const std::vector<std::pair<std::string, std::string>>& inputs() const { return inputs_; }
    const std::vector<Check>& checks() const { return checks_; }

    void add_input(std::string name, std::string value) {
        inputs_.emplace_back(std::move(name), std::move(value));
    }

    void add_check(std::string name, bool passed, std::string detail = "") {
        checks_.push_back({std::move(name), passed, std::move(detail)});
    }

    /// Appends every check of `other` under "<prefix>.<name>".
    void absorb(const Report& other, const std::string& prefix) {
        for (const Check& c : other.checks())
            checks_.push_back({prefix + "." + c.name, c.passed, c.detail});
    }

    bool passed() const {
        for (const Check& c : checks_)
            if (!c.passed)
                return false;
        return true;
    }

    const std::string* find_input(const std::string& name) const {
        for (const auto& [k, v] : inputs_)
            if (k == name)
                return &v;
        return nullptr;
    }

    const Check* find_check(const std::string& name) const {
        for (const Check& c : checks_)
            if (c.name == name)
                return &c;
        return nullptr;
    }

    friend bool operator==(const Report&, const Report&) = default;

    jsonval to_json() const {
        jsonval j;
        j["command"] = command_;
        jsonval in = jsonval::array();
        for (const auto& [name, value] : inputs_)
            in.push_back(jsonval{{"name", name}, {"value", value}});
        j["inputs"] = std::move(in);
        jsonval ch = jsonval::array();
        for (const Check& c : checks_)
            ch.push_back(jsonval{
                {"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
        j["checks"] = std::move(ch);
        j["verdict"] = passed() ? "pass" : "fail";
        return j;
    }

    static Report from_json(const jsonval& j) {
        Report r(j.at("command").get<std::string>());
        for (const auto& in : j.at("inputs"))
            r.add_input(in.at("name").get<std::string>(), in.at("value").get<std::string>());
        for (const auto& ch : j.at("checks")) {
            std::string status = ch.at("status").get<std::string>();
            if (status != "pass" && status != "fail")
                throw error("report check status must be 'pass' or 'fail', got '" + status + "'");
            r.add_check(ch.at("name").get<std::string>(), status == "pass",
                        ch.at("detail").get<std::string>());
        }
        std::string verdict = j.at("verdict").get<std::string>();
        if (verdict != (r.passed() ? "pass" : "fail"))
            throw error("report verdict is inconsistent with its checks");
        return r;
    }

    std::string to_text() const {
        std::string out = "command: " + command_ + "\n";
        if (!inputs_.empty()) {
            out += "inputs:\n";
            for (const auto& [name, value] : inputs_)
                out += "  " + name + " = " + value + "\n";
        }
        std::size_t width = 0;
        for (const Check& c : checks_)
            width = std::max(width, c.name.size());
        out += "checks:\n";
        for (const Check& c : checks_) {
            out += c.passed ? "  [pass] " : "  [FAIL] ";
            out += c.name;
            if (!c.detail.empty()) {
                out.append(width - c.name.size() + 2, ' ');
                out += c.detail;
            }
            out += "\n";
        }
        out += "verdict: ";
        out += passed() ? "PASS" : "FAIL";
        out += "\n";
        return out;
    }

private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    std::vector<Check> checks_;
};

/// Structural validation against the report schema shipped in
/// schemas/report.schema.json.
inline bool report_json_is_valid(const jsonval& j) {
    if (!j.is_object())
        return false;
    if (!j.contains("command") || !j.at("command").is_string())
        return false;
    if (!j.contains("inputs") || !j.at("inputs").is_array())
        return false;
    for (const auto& in : j.at("inputs")) {
        if (!in.is_object() || !in.contains("name") || !in.at("name").is_string() ||
            !in.contains("value") || !in.at("value").is_string())
            return false;
    }
    if (!j.contains("checks") || !j.at("checks").is_array())
        return false;
    bool all_pass = true;
    for (const auto& ch : j.at("checks")) {
        if (!ch.is_object() || !ch.contains("name") || !ch.at("name").is_string() ||
            !ch.contains("status") || !ch.at("status").is_string() || !ch.contains("detail") ||
            !ch.at("detail").is_string())
            return false;
        std::string status = ch.at("status").get<std::string>();
        if (status != "pass" && status != "fail")
            return false;
        all_pass = all_pass && status == "pass";
    }
    if (!j.contains("verdict") || !j.at("verdict").is_string())
        return false;
    std::string verdict = j.at("verdict").get<std::string>();
    return verdict == (all_pass ? "pass" : "fail");
}

}  // namespace fgq
