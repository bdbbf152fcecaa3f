#include "qlie/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace qlie {

namespace {

std::string index_text(const std::vector<int> &idx)
{
    std::string s = "(";
    for (std::size_t k = 0; k < idx.size(); ++k)
        s += (k ? "," : "") + std::to_string(idx[k]);
    return s + ")";
}

} // namespace

void Report::add(const ValidationReport &rep, const std::string &scope)
{
    auto label = [&](const std::string &name) { return scope.empty() ? name : scope + ":" + name; };
    std::vector<std::string> names = rep.checks;
    for (auto &v : rep.violations)
        if (std::find(names.begin(), names.end(), v.axiom) == names.end())
            names.push_back(v.axiom);
    for (auto &n : names) {
        CheckResult c{label(n), true, {}};
        for (auto &v : rep.violations)
            if (v.axiom == n) {
                c.pass = false;
                c.residual.push_back(index_text(v.index) + " " + v.residual);
            }
        if (!c.pass && status == "pass")
            status = "fail";
        checks.push_back(std::move(c));
    }
}

bool Report::pass() const
{
    return status == "pass";
}

std::string Report::to_json(bool with_timing) const
{
    nlohmann::ordered_json j;
    j["command"] = command;
    j["status"] = status;
    j["order"] = order;
    j["hcap"] = hcap;
    j["checks"] = nlohmann::ordered_json::array();
    for (auto &c : checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}});
    j["output"] = output;
    j["message"] = message;
    if (with_timing)
        j["seconds"] = seconds;
    return j.dump(2);
}

std::string Report::to_text() const
{
    std::ostringstream out;
    out << "command: " << command << "\n";
    out << "status: " << status << "\n";
    out << "order: " << order << "  hcap: " << hcap << "\n";
    if (!message.empty())
        out << "message: " << message << "\n";
    for (auto &line : output)
        out << line << "\n";
    for (auto &c : checks) {
        out << (c.pass ? "[pass] " : "[FAIL] ") << c.name << "\n";
        for (auto &r : c.residual) {
            std::istringstream rs(r);
            std::string l;
            while (std::getline(rs, l))
                out << "    " << l << "\n";
        }
    }
    out << "seconds: " << std::fixed << std::setprecision(3) << seconds << "\n";
    return out.str();
}

Report report_from_json(const std::string &text)
{
    auto j = nlohmann::json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    r.status = j.at("status").get<std::string>();
    r.order = j.at("order").get<int>();
    r.hcap = j.at("hcap").get<int>();
    for (auto &c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                            c.at("residual").get<std::vector<std::string>>()});
    r.output = j.at("output").get<std::vector<std::string>>();
    r.message = j.at("message").get<std::string>();
    if (j.contains("seconds"))
        r.seconds = j.at("seconds").get<double>();
    return r;
}

} // namespace qlie
