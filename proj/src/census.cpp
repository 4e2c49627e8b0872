#include "wordauto/census.hpp"

#include <json.hpp>
#include <sstream>

namespace wordauto {

mpz_class freeGroupDemand(int p, int n) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(n) * (n - 1) / 2);
    return out;
}

CensusReport censusReport(const Dfa& domain, int maxLen, int p, int lengthFactor) {
    if (maxLen < 1) throw std::invalid_argument("census: maxLen must be >= 1");
    CensusReport report;
    report.p = p;
    report.lengthFactor = p ? lengthFactor : 0;
    mpz_class cumulative = 0;
    for (int len = 0; len <= maxLen; ++len) {
        CensusRow row;
        row.length = len;
        row.count = countWords(domain, len);
        cumulative += row.count;
        row.cumulative = cumulative;
        report.rows.push_back(std::move(row));
    }
    if (p) {
        // supply(c*n) grows like |Sigma|^(c*n); demand is p^(n(n-1)/2), so the
        // crossover appears quickly
        auto supplyUpTo = [&](int len) {
            mpz_class total = 0;
            for (int l = 0; l <= len; ++l) total += countWords(domain, l);
            return total;
        };
        for (int n = 1; n <= 256; ++n) {
            mpz_class demand = freeGroupDemand(p, n);
            if (n <= maxLen || static_cast<int>(report.demand.size()) < n)
                report.demand.push_back(demand);
            mpz_class supply = supplyUpTo(lengthFactor * n);
            if (demand > supply) {
                report.overtakeN = n;
                report.overtakeDemand = demand;
                report.overtakeSupply = supply;
                break;
            }
        }
        while (static_cast<int>(report.demand.size()) < maxLen)
            report.demand.push_back(freeGroupDemand(p, static_cast<int>(report.demand.size()) + 1));
    }
    return report;
}

std::string CensusReport::renderTable() const {
    std::ostringstream os;
    os << "length  count  cumulative\n";
    for (const auto& row : rows)
        os << row.length << "  " << row.count.get_str() << "  " << row.cumulative.get_str() << "\n";
    if (p) {
        os << "\ndemand p^(n(n-1)/2) for p = " << p << ":\n";
        for (size_t i = 0; i < demand.size(); ++i)
            os << "n=" << (i + 1) << "  " << demand[i].get_str() << "\n";
        if (overtakeN > 0) {
            os << "\ndemand exceeds the supply of words of length <= " << lengthFactor
               << "*n at n = " << overtakeN << ": " << overtakeDemand.get_str() << " > "
               << overtakeSupply.get_str() << "\n";
        }
    }
    return os.str();
}

std::string CensusReport::renderJson() const {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows)
        j["rows"].push_back({{"length", row.length},
                             {"count", row.count.get_str()},
                             {"cumulative", row.cumulative.get_str()}});
    if (p) {
        j["p"] = p;
        j["lengthFactor"] = lengthFactor;
        nlohmann::json d = nlohmann::json::array();
        for (const auto& v : demand) d.push_back(v.get_str());
        j["demand"] = std::move(d);
        if (overtakeN > 0) {
            j["overtake"] = {{"n", overtakeN},
                             {"demand", overtakeDemand.get_str()},
                             {"supply", overtakeSupply.get_str()}};
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace wordauto
