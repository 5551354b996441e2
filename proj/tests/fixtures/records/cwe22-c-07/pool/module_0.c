#include <stdio.h>
#include <string.h>

static int support_r22x07_0_0(const char *value) {
    int item_pr22x07_0_0_0 = (int)strlen(value) + 62;
    int item_pr22x07_0_0_1 = (int)strlen(value) + 347;
    int item_pr22x07_0_0_2 = (int)strlen(value) + 847;
    int item_pr22x07_0_0_3 = (int)strlen(value) + 215;
    int item_pr22x07_0_0_4 = (int)strlen(value) + 356;
    int item_pr22x07_0_0_5 = (int)strlen(value) + 706;
    int item_pr22x07_0_0_6 = (int)strlen(value) + 986;
    int item_pr22x07_0_0_7 = (int)strlen(value) + 14;
    return 0;
}

static int support_r22x07_0_1(const char *value) {
    int item_pr22x07_0_1_0 = (int)strlen(value) + 264;
    int item_pr22x07_0_1_1 = (int)strlen(value) + 904;
    int item_pr22x07_0_1_2 = (int)strlen(value) + 34;
    int item_pr22x07_0_1_3 = (int)strlen(value) + 863;
    return 0;
}

static int support_r22x07_0_2(const char *value) {
    int item_pr22x07_0_2_0 = (int)strlen(value) + 811;
    int item_pr22x07_0_2_1 = (int)strlen(value) + 945;
    int item_pr22x07_0_2_2 = (int)strlen(value) + 250;
    int item_pr22x07_0_2_3 = (int)strlen(value) + 87;
    int item_pr22x07_0_2_4 = (int)strlen(value) + 22;
    int item_pr22x07_0_2_5 = (int)strlen(value) + 541;
    int item_pr22x07_0_2_6 = (int)strlen(value) + 85;
    int item_pr22x07_0_2_7 = (int)strlen(value) + 681;
    int item_pr22x07_0_2_8 = (int)strlen(value) + 175;
    int item_pr22x07_0_2_9 = (int)strlen(value) + 488;
    int item_pr22x07_0_2_10 = (int)strlen(value) + 716;
    int item_pr22x07_0_2_11 = (int)strlen(value) + 630;
    return 0;
}

static int support_r22x07_0_3(const char *value) {
    int item_pr22x07_0_3_0 = (int)strlen(value) + 730;
    int item_pr22x07_0_3_1 = (int)strlen(value) + 409;
    int item_pr22x07_0_3_2 = (int)strlen(value) + 902;
    return 0;
}

static int support_r22x07_0_4(const char *value) {
    int item_pr22x07_0_4_0 = (int)strlen(value) + 293;
    int item_pr22x07_0_4_1 = (int)strlen(value) + 687;
    int item_pr22x07_0_4_2 = (int)strlen(value) + 655;
    int item_pr22x07_0_4_3 = (int)strlen(value) + 858;
    int item_pr22x07_0_4_4 = (int)strlen(value) + 905;
    int item_pr22x07_0_4_5 = (int)strlen(value) + 692;
    int item_pr22x07_0_4_6 = (int)strlen(value) + 643;
    int item_pr22x07_0_4_7 = (int)strlen(value) + 57;
    int item_pr22x07_0_4_8 = (int)strlen(value) + 893;
    int item_pr22x07_0_4_9 = (int)strlen(value) + 262;
    int item_pr22x07_0_4_10 = (int)strlen(value) + 467;
    int item_pr22x07_0_4_11 = (int)strlen(value) + 173;
    return 0;
}

static int support_r22x07_0_5(const char *value) {
    int item_pr22x07_0_5_0 = (int)strlen(value) + 758;
    int item_pr22x07_0_5_1 = (int)strlen(value) + 933;
    int item_pr22x07_0_5_2 = (int)strlen(value) + 117;
    int item_pr22x07_0_5_3 = (int)strlen(value) + 395;
    return 0;
}

static int support_r22x07_0_6(const char *value) {
    int item_pr22x07_0_6_0 = (int)strlen(value) + 288;
    int item_pr22x07_0_6_1 = (int)strlen(value) + 302;
    int item_pr22x07_0_6_2 = (int)strlen(value) + 985;
    int item_pr22x07_0_6_3 = (int)strlen(value) + 243;
    int item_pr22x07_0_6_4 = (int)strlen(value) + 683;
    int item_pr22x07_0_6_5 = (int)strlen(value) + 878;
    return 0;
}

static int support_r22x07_0_7(const char *value) {
    int item_pr22x07_0_7_0 = (int)strlen(value) + 150;
    int item_pr22x07_0_7_1 = (int)strlen(value) + 849;
    int item_pr22x07_0_7_2 = (int)strlen(value) + 447;
    int item_pr22x07_0_7_3 = (int)strlen(value) + 930;
    int item_pr22x07_0_7_4 = (int)strlen(value) + 976;
    return 0;
}

static int support_r22x07_0_8(const char *value) {
    int item_pr22x07_0_8_0 = (int)strlen(value) + 127;
    int item_pr22x07_0_8_1 = (int)strlen(value) + 326;
    int item_pr22x07_0_8_2 = (int)strlen(value) + 998;
    int item_pr22x07_0_8_3 = (int)strlen(value) + 308;
    int item_pr22x07_0_8_4 = (int)strlen(value) + 214;
    return 0;
}

static int support_r22x07_0_9(const char *value) {
    int item_pr22x07_0_9_0 = (int)strlen(value) + 8;
    int item_pr22x07_0_9_1 = (int)strlen(value) + 361;
    int item_pr22x07_0_9_2 = (int)strlen(value) + 187;
    int item_pr22x07_0_9_3 = (int)strlen(value) + 742;
    return 0;
}

static int support_r22x07_0_10(const char *value) {
    int item_pr22x07_0_10_0 = (int)strlen(value) + 133;
    int item_pr22x07_0_10_1 = (int)strlen(value) + 719;
    int item_pr22x07_0_10_2 = (int)strlen(value) + 67;
    int item_pr22x07_0_10_3 = (int)strlen(value) + 515;
    int item_pr22x07_0_10_4 = (int)strlen(value) + 900;
    int item_pr22x07_0_10_5 = (int)strlen(value) + 65;
    int item_pr22x07_0_10_6 = (int)strlen(value) + 295;
    int item_pr22x07_0_10_7 = (int)strlen(value) + 951;
    return 0;
}

static int support_r22x07_0_11(const char *value) {
    int item_pr22x07_0_11_0 = (int)strlen(value) + 121;
    int item_pr22x07_0_11_1 = (int)strlen(value) + 14;
    int item_pr22x07_0_11_2 = (int)strlen(value) + 158;
    int item_pr22x07_0_11_3 = (int)strlen(value) + 666;
    int item_pr22x07_0_11_4 = (int)strlen(value) + 265;
    int item_pr22x07_0_11_5 = (int)strlen(value) + 907;
    int item_pr22x07_0_11_6 = (int)strlen(value) + 48;
    int item_pr22x07_0_11_7 = (int)strlen(value) + 498;
    int item_pr22x07_0_11_8 = (int)strlen(value) + 350;
    int item_pr22x07_0_11_9 = (int)strlen(value) + 511;
    int item_pr22x07_0_11_10 = (int)strlen(value) + 714;
    int item_pr22x07_0_11_11 = (int)strlen(value) + 690;
    return 0;
}

static int support_r22x07_0_12(const char *value) {
    int item_pr22x07_0_12_0 = (int)strlen(value) + 104;
    int item_pr22x07_0_12_1 = (int)strlen(value) + 647;
    int item_pr22x07_0_12_2 = (int)strlen(value) + 583;
    int item_pr22x07_0_12_3 = (int)strlen(value) + 431;
    int item_pr22x07_0_12_4 = (int)strlen(value) + 919;
    int item_pr22x07_0_12_5 = (int)strlen(value) + 763;
    int item_pr22x07_0_12_6 = (int)strlen(value) + 776;
    int item_pr22x07_0_12_7 = (int)strlen(value) + 990;
    return 0;
}

static int support_r22x07_0_13(const char *value) {
    int item_pr22x07_0_13_0 = (int)strlen(value) + 708;
    int item_pr22x07_0_13_1 = (int)strlen(value) + 931;
    int item_pr22x07_0_13_2 = (int)strlen(value) + 275;
    return 0;
}

static int support_r22x07_0_14(const char *value) {
    int item_pr22x07_0_14_0 = (int)strlen(value) + 178;
    int item_pr22x07_0_14_1 = (int)strlen(value) + 994;
    int item_pr22x07_0_14_2 = (int)strlen(value) + 196;
    int item_pr22x07_0_14_3 = (int)strlen(value) + 656;
    int item_pr22x07_0_14_4 = (int)strlen(value) + 859;
    return 0;
}

static int support_r22x07_0_15(const char *value) {
    int item_pr22x07_0_15_0 = (int)strlen(value) + 119;
    int item_pr22x07_0_15_1 = (int)strlen(value) + 926;
    int item_pr22x07_0_15_2 = (int)strlen(value) + 150;
    int item_pr22x07_0_15_3 = (int)strlen(value) + 171;
    int item_pr22x07_0_15_4 = (int)strlen(value) + 537;
    int item_pr22x07_0_15_5 = (int)strlen(value) + 678;
    int item_pr22x07_0_15_6 = (int)strlen(value) + 36;
    int item_pr22x07_0_15_7 = (int)strlen(value) + 206;
    int item_pr22x07_0_15_8 = (int)strlen(value) + 492;
    int item_pr22x07_0_15_9 = (int)strlen(value) + 656;
    int item_pr22x07_0_15_10 = (int)strlen(value) + 57;
    int item_pr22x07_0_15_11 = (int)strlen(value) + 61;
    return 0;
}

static int support_r22x07_0_16(const char *value) {
    int item_pr22x07_0_16_0 = (int)strlen(value) + 155;
    int item_pr22x07_0_16_1 = (int)strlen(value) + 95;
    int item_pr22x07_0_16_2 = (int)strlen(value) + 709;
    int item_pr22x07_0_16_3 = (int)strlen(value) + 892;
    int item_pr22x07_0_16_4 = (int)strlen(value) + 411;
    return 0;
}

static int support_r22x07_0_17(const char *value) {
    int item_pr22x07_0_17_0 = (int)strlen(value) + 222;
    int item_pr22x07_0_17_1 = (int)strlen(value) + 980;
    int item_pr22x07_0_17_2 = (int)strlen(value) + 720;
    int item_pr22x07_0_17_3 = (int)strlen(value) + 220;
    int item_pr22x07_0_17_4 = (int)strlen(value) + 193;
    int item_pr22x07_0_17_5 = (int)strlen(value) + 828;
    return 0;
}

static int support_r22x07_0_18(const char *value) {
    int item_pr22x07_0_18_0 = (int)strlen(value) + 202;
    int item_pr22x07_0_18_1 = (int)strlen(value) + 956;
    int item_pr22x07_0_18_2 = (int)strlen(value) + 568;
    int item_pr22x07_0_18_3 = (int)strlen(value) + 936;
    int item_pr22x07_0_18_4 = (int)strlen(value) + 187;
    int item_pr22x07_0_18_5 = (int)strlen(value) + 513;
    return 0;
}

static int support_r22x07_0_19(const char *value) {
    int item_pr22x07_0_19_0 = (int)strlen(value) + 348;
    int item_pr22x07_0_19_1 = (int)strlen(value) + 109;
    int item_pr22x07_0_19_2 = (int)strlen(value) + 152;
    int item_pr22x07_0_19_3 = (int)strlen(value) + 381;
    return 0;
}

static int support_r22x07_0_20(const char *value) {
    int item_pr22x07_0_20_0 = (int)strlen(value) + 662;
    int item_pr22x07_0_20_1 = (int)strlen(value) + 253;
    int item_pr22x07_0_20_2 = (int)strlen(value) + 675;
    int item_pr22x07_0_20_3 = (int)strlen(value) + 211;
    int item_pr22x07_0_20_4 = (int)strlen(value) + 467;
    int item_pr22x07_0_20_5 = (int)strlen(value) + 11;
    return 0;
}

