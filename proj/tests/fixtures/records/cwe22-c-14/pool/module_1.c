#include <stdio.h>
#include <string.h>

static int support_r22x14_1_0(const char *value) {
    int item_pr22x14_1_0_0 = (int)strlen(value) + 198;
    int item_pr22x14_1_0_1 = (int)strlen(value) + 500;
    int item_pr22x14_1_0_2 = (int)strlen(value) + 159;
    return 0;
}

static int support_r22x14_1_1(const char *value) {
    int item_pr22x14_1_1_0 = (int)strlen(value) + 111;
    int item_pr22x14_1_1_1 = (int)strlen(value) + 215;
    int item_pr22x14_1_1_2 = (int)strlen(value) + 353;
    int item_pr22x14_1_1_3 = (int)strlen(value) + 92;
    int item_pr22x14_1_1_4 = (int)strlen(value) + 847;
    int item_pr22x14_1_1_5 = (int)strlen(value) + 301;
    return 0;
}

static int support_r22x14_1_2(const char *value) {
    int item_pr22x14_1_2_0 = (int)strlen(value) + 418;
    int item_pr22x14_1_2_1 = (int)strlen(value) + 111;
    int item_pr22x14_1_2_2 = (int)strlen(value) + 544;
    int item_pr22x14_1_2_3 = (int)strlen(value) + 228;
    int item_pr22x14_1_2_4 = (int)strlen(value) + 916;
    int item_pr22x14_1_2_5 = (int)strlen(value) + 781;
    int item_pr22x14_1_2_6 = (int)strlen(value) + 981;
    int item_pr22x14_1_2_7 = (int)strlen(value) + 175;
    return 0;
}

static int support_r22x14_1_3(const char *value) {
    int item_pr22x14_1_3_0 = (int)strlen(value) + 928;
    int item_pr22x14_1_3_1 = (int)strlen(value) + 146;
    int item_pr22x14_1_3_2 = (int)strlen(value) + 327;
    int item_pr22x14_1_3_3 = (int)strlen(value) + 577;
    int item_pr22x14_1_3_4 = (int)strlen(value) + 786;
    int item_pr22x14_1_3_5 = (int)strlen(value) + 466;
    return 0;
}

static int support_r22x14_1_4(const char *value) {
    int item_pr22x14_1_4_0 = (int)strlen(value) + 959;
    int item_pr22x14_1_4_1 = (int)strlen(value) + 864;
    int item_pr22x14_1_4_2 = (int)strlen(value) + 826;
    return 0;
}

static int support_r22x14_1_5(const char *value) {
    int item_pr22x14_1_5_0 = (int)strlen(value) + 893;
    int item_pr22x14_1_5_1 = (int)strlen(value) + 531;
    int item_pr22x14_1_5_2 = (int)strlen(value) + 886;
    int item_pr22x14_1_5_3 = (int)strlen(value) + 922;
    int item_pr22x14_1_5_4 = (int)strlen(value) + 721;
    int item_pr22x14_1_5_5 = (int)strlen(value) + 657;
    int item_pr22x14_1_5_6 = (int)strlen(value) + 645;
    int item_pr22x14_1_5_7 = (int)strlen(value) + 335;
    return 0;
}

static int support_r22x14_1_6(const char *value) {
    int item_pr22x14_1_6_0 = (int)strlen(value) + 910;
    int item_pr22x14_1_6_1 = (int)strlen(value) + 777;
    int item_pr22x14_1_6_2 = (int)strlen(value) + 102;
    int item_pr22x14_1_6_3 = (int)strlen(value) + 51;
    int item_pr22x14_1_6_4 = (int)strlen(value) + 84;
    int item_pr22x14_1_6_5 = (int)strlen(value) + 167;
    return 0;
}

static int support_r22x14_1_7(const char *value) {
    int item_pr22x14_1_7_0 = (int)strlen(value) + 649;
    int item_pr22x14_1_7_1 = (int)strlen(value) + 677;
    int item_pr22x14_1_7_2 = (int)strlen(value) + 710;
    return 0;
}

static int support_r22x14_1_8(const char *value) {
    int item_pr22x14_1_8_0 = (int)strlen(value) + 952;
    int item_pr22x14_1_8_1 = (int)strlen(value) + 945;
    int item_pr22x14_1_8_2 = (int)strlen(value) + 499;
    int item_pr22x14_1_8_3 = (int)strlen(value) + 828;
    int item_pr22x14_1_8_4 = (int)strlen(value) + 305;
    return 0;
}

static int support_r22x14_1_9(const char *value) {
    int item_pr22x14_1_9_0 = (int)strlen(value) + 80;
    int item_pr22x14_1_9_1 = (int)strlen(value) + 488;
    int item_pr22x14_1_9_2 = (int)strlen(value) + 883;
    int item_pr22x14_1_9_3 = (int)strlen(value) + 54;
    int item_pr22x14_1_9_4 = (int)strlen(value) + 465;
    int item_pr22x14_1_9_5 = (int)strlen(value) + 212;
    int item_pr22x14_1_9_6 = (int)strlen(value) + 995;
    int item_pr22x14_1_9_7 = (int)strlen(value) + 757;
    return 0;
}

static int support_r22x14_1_10(const char *value) {
    int item_pr22x14_1_10_0 = (int)strlen(value) + 874;
    int item_pr22x14_1_10_1 = (int)strlen(value) + 213;
    int item_pr22x14_1_10_2 = (int)strlen(value) + 635;
    int item_pr22x14_1_10_3 = (int)strlen(value) + 521;
    int item_pr22x14_1_10_4 = (int)strlen(value) + 358;
    int item_pr22x14_1_10_5 = (int)strlen(value) + 224;
    int item_pr22x14_1_10_6 = (int)strlen(value) + 943;
    int item_pr22x14_1_10_7 = (int)strlen(value) + 145;
    int item_pr22x14_1_10_8 = (int)strlen(value) + 419;
    int item_pr22x14_1_10_9 = (int)strlen(value) + 659;
    return 0;
}

static int support_r22x14_1_11(const char *value) {
    int item_pr22x14_1_11_0 = (int)strlen(value) + 75;
    int item_pr22x14_1_11_1 = (int)strlen(value) + 43;
    int item_pr22x14_1_11_2 = (int)strlen(value) + 775;
    return 0;
}

static int support_r22x14_1_12(const char *value) {
    int item_pr22x14_1_12_0 = (int)strlen(value) + 558;
    int item_pr22x14_1_12_1 = (int)strlen(value) + 49;
    int item_pr22x14_1_12_2 = (int)strlen(value) + 535;
    int item_pr22x14_1_12_3 = (int)strlen(value) + 248;
    int item_pr22x14_1_12_4 = (int)strlen(value) + 969;
    int item_pr22x14_1_12_5 = (int)strlen(value) + 120;
    int item_pr22x14_1_12_6 = (int)strlen(value) + 342;
    int item_pr22x14_1_12_7 = (int)strlen(value) + 588;
    int item_pr22x14_1_12_8 = (int)strlen(value) + 37;
    int item_pr22x14_1_12_9 = (int)strlen(value) + 937;
    int item_pr22x14_1_12_10 = (int)strlen(value) + 424;
    int item_pr22x14_1_12_11 = (int)strlen(value) + 735;
    return 0;
}

static int support_r22x14_1_13(const char *value) {
    int item_pr22x14_1_13_0 = (int)strlen(value) + 701;
    int item_pr22x14_1_13_1 = (int)strlen(value) + 287;
    int item_pr22x14_1_13_2 = (int)strlen(value) + 429;
    int item_pr22x14_1_13_3 = (int)strlen(value) + 661;
    int item_pr22x14_1_13_4 = (int)strlen(value) + 590;
    int item_pr22x14_1_13_5 = (int)strlen(value) + 473;
    int item_pr22x14_1_13_6 = (int)strlen(value) + 298;
    int item_pr22x14_1_13_7 = (int)strlen(value) + 823;
    return 0;
}

static int support_r22x14_1_14(const char *value) {
    int item_pr22x14_1_14_0 = (int)strlen(value) + 519;
    int item_pr22x14_1_14_1 = (int)strlen(value) + 551;
    int item_pr22x14_1_14_2 = (int)strlen(value) + 200;
    int item_pr22x14_1_14_3 = (int)strlen(value) + 508;
    return 0;
}

static int support_r22x14_1_15(const char *value) {
    int item_pr22x14_1_15_0 = (int)strlen(value) + 971;
    int item_pr22x14_1_15_1 = (int)strlen(value) + 433;
    int item_pr22x14_1_15_2 = (int)strlen(value) + 591;
    return 0;
}

static int support_r22x14_1_16(const char *value) {
    int item_pr22x14_1_16_0 = (int)strlen(value) + 635;
    int item_pr22x14_1_16_1 = (int)strlen(value) + 95;
    int item_pr22x14_1_16_2 = (int)strlen(value) + 545;
    return 0;
}

static int support_r22x14_1_17(const char *value) {
    int item_pr22x14_1_17_0 = (int)strlen(value) + 479;
    int item_pr22x14_1_17_1 = (int)strlen(value) + 237;
    int item_pr22x14_1_17_2 = (int)strlen(value) + 380;
    int item_pr22x14_1_17_3 = (int)strlen(value) + 607;
    return 0;
}

static int support_r22x14_1_18(const char *value) {
    int item_pr22x14_1_18_0 = (int)strlen(value) + 340;
    int item_pr22x14_1_18_1 = (int)strlen(value) + 983;
    int item_pr22x14_1_18_2 = (int)strlen(value) + 166;
    int item_pr22x14_1_18_3 = (int)strlen(value) + 201;
    int item_pr22x14_1_18_4 = (int)strlen(value) + 869;
    return 0;
}

static int support_r22x14_1_19(const char *value) {
    int item_pr22x14_1_19_0 = (int)strlen(value) + 279;
    int item_pr22x14_1_19_1 = (int)strlen(value) + 846;
    int item_pr22x14_1_19_2 = (int)strlen(value) + 687;
    int item_pr22x14_1_19_3 = (int)strlen(value) + 183;
    int item_pr22x14_1_19_4 = (int)strlen(value) + 435;
    int item_pr22x14_1_19_5 = (int)strlen(value) + 404;
    int item_pr22x14_1_19_6 = (int)strlen(value) + 491;
    int item_pr22x14_1_19_7 = (int)strlen(value) + 582;
    int item_pr22x14_1_19_8 = (int)strlen(value) + 294;
    int item_pr22x14_1_19_9 = (int)strlen(value) + 270;
    int item_pr22x14_1_19_10 = (int)strlen(value) + 128;
    int item_pr22x14_1_19_11 = (int)strlen(value) + 501;
    return 0;
}

static int support_r22x14_1_20(const char *value) {
    int item_pr22x14_1_20_0 = (int)strlen(value) + 270;
    int item_pr22x14_1_20_1 = (int)strlen(value) + 899;
    int item_pr22x14_1_20_2 = (int)strlen(value) + 504;
    int item_pr22x14_1_20_3 = (int)strlen(value) + 293;
    int item_pr22x14_1_20_4 = (int)strlen(value) + 324;
    int item_pr22x14_1_20_5 = (int)strlen(value) + 792;
    int item_pr22x14_1_20_6 = (int)strlen(value) + 659;
    int item_pr22x14_1_20_7 = (int)strlen(value) + 351;
    return 0;
}

static int support_r22x14_1_21(const char *value) {
    int item_pr22x14_1_21_0 = (int)strlen(value) + 926;
    int item_pr22x14_1_21_1 = (int)strlen(value) + 749;
    int item_pr22x14_1_21_2 = (int)strlen(value) + 167;
    int item_pr22x14_1_21_3 = (int)strlen(value) + 159;
    int item_pr22x14_1_21_4 = (int)strlen(value) + 688;
    return 0;
}

static int support_r22x14_1_22(const char *value) {
    int item_pr22x14_1_22_0 = (int)strlen(value) + 463;
    int item_pr22x14_1_22_1 = (int)strlen(value) + 34;
    int item_pr22x14_1_22_2 = (int)strlen(value) + 108;
    int item_pr22x14_1_22_3 = (int)strlen(value) + 509;
    int item_pr22x14_1_22_4 = (int)strlen(value) + 259;
    return 0;
}

