#ifndef AFFINEJT_REPORT_HPP
#define AFFINEJT_REPORT_HPP

#include <map>
#include <optional>
#include <string>

namespace affinejt {

// Outcome of one named identity check.
struct CheckReport {
    enum class Status { kPass, kFail, kSkipped };

    struct Witness {
        std::string where;  // monomial or Q-power of the first discrepancy
        std::string lhs;
        std::string rhs;
    };

    std::string id;
    std::map<std::string, std::string> params;
    Status status = Status::kPass;
    int order = 0;  // truncation order used; 0 for exact polynomial checks
    std::optional<Witness> witness;
    std::string note;
    long elapsed_ms = 0;

    bool passed() const { return status == Status::kPass; }

    static CheckReport pass(std::string id, int order = 0) {
        CheckReport r;
        r.id = std::move(id);
        r.order = order;
        return r;
    }
    static CheckReport fail(std::string id, Witness w, int order = 0) {
        CheckReport r;
        r.id = std::move(id);
        r.status = Status::kFail;
        r.witness = std::move(w);
        r.order = order;
        return r;
    }
};

const char* to_string(CheckReport::Status s);

}  // namespace affinejt

#endif
