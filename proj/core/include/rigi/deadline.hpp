#ifndef RIGI_DEADLINE_HPP
#define RIGI_DEADLINE_HPP

#include <chrono>

namespace rigi {

// Wall-clock budget handed to long-running searches. A default-constructed
// deadline never expires.
class Deadline {
public:
    Deadline() : limited_(false) {}

    static Deadline unlimited() { return Deadline(); }

    static Deadline after(double seconds) {
        Deadline d;
        d.limited_ = true;
        d.end_ = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(seconds));
        return d;
    }

    bool expired() const {
        return limited_ && std::chrono::steady_clock::now() >= end_;
    }

private:
    bool limited_;
    std::chrono::steady_clock::time_point end_;
};

} // namespace rigi

#endif // RIGI_DEADLINE_HPP
