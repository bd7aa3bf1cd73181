#pragma once

#include "alphabet.hpp"
#include "builder.hpp"
#include "dynseq.hpp"
#include "encoding.hpp"
#include "oracle.hpp"
