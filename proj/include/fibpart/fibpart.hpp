#ifndef FIBPART_FIBPART_HPP
#define FIBPART_FIBPART_HPP

#include "fibpart/asymptotics.hpp"
#include "fibpart/bigfib.hpp"
#include "fibpart/errors.hpp"
#include "fibpart/numeric.hpp"
#include "fibpart/oracle.hpp"
#include "fibpart/partition_count.hpp"
#include "fibpart/summatory.hpp"

#endif  // FIBPART_FIBPART_HPP
